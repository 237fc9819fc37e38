#include "irred/gadgets.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string>

#include "irred/errors.hpp"

namespace irred {
namespace {

class FreshVars {
 public:
  FreshVars(std::uint32_t universe, GadgetOutput& out) : next_(universe + 1), out_(out) {}

  Var take(std::string role) {
    Var v{next_++};
    out_.fresh_vars.emplace_back(std::move(role), v);
    return v;
  }
  std::uint32_t universe() const { return next_ - 1; }

 private:
  std::uint32_t next_;
  GadgetOutput& out_;
};

std::string indexed(const std::string& base, std::size_t i) { return base + "_" + std::to_string(i); }

std::vector<Lit> with(std::span<const Lit> lits, std::initializer_list<Lit> extra) {
  std::vector<Lit> out(lits.begin(), lits.end());
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

bool contains(const std::vector<Var>& vs, Var v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }

// X and Y disjoint and together covering the variables of g.
void check_quantifier_split(const Formula& g, const std::vector<Var>& x, const std::vector<Var>& y) {
  for (Var v : x) {
    if (contains(y, v)) {
      throw PreconditionError("variable " + std::to_string(v.index) + " is in both X and Y");
    }
  }
  for (Var v : g.vars()) {
    if (!contains(x, v) && !contains(y, v)) {
      throw PreconditionError("variable " + std::to_string(v.index) + " of the base is in neither X nor Y");
    }
  }
}

std::uint32_t max_index(const Formula& g, const std::vector<Var>& x, const std::vector<Var>& y) {
  std::uint32_t u = g.universe();
  for (Var v : x) u = std::max(u, v.index);
  for (Var v : y) u = std::max(u, v.index);
  return u;
}

// Guarded clauses -c_i | gamma_i, appended to `clauses`.
std::vector<Var> add_guarded(const Formula& g, const std::string& selector, FreshVars& fresh,
                             std::vector<Clause>& clauses) {
  std::vector<Var> selectors;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Var c = fresh.take(indexed(selector, i + 1));
    selectors.push_back(c);
    clauses.push_back(Clause::make(with(g[i].literals(), {Lit::neg(c)})));
  }
  return selectors;
}

Clause wide_clause(const std::vector<Var>& selectors, Var extra) {
  std::vector<Lit> lits;
  for (Var c : selectors) lits.push_back(Lit::neg(c));
  lits.push_back(Lit::neg(extra));
  return Clause::make(std::move(lits));
}

ClauseId id_of(const Formula& f, const Clause& c) { return *f.find(c); }

}  // namespace

Var GadgetOutput::fresh(const std::string& role) const {
  for (const auto& [name, v] : fresh_vars) {
    if (name == role) return v;
  }
  throw PreconditionError("gadget has no fresh variable named '" + role + "'");
}

GadgetOutput irredundant_version(const Formula& g) {
  GadgetOutput out;
  FreshVars fresh(g.universe(), out);
  std::vector<Clause> clauses;
  add_guarded(g, "c", fresh, clauses);
  out.formula = Formula(std::move(clauses), fresh.universe());
  out.params["m"] = static_cast<std::int64_t>(g.size());
  return out;
}

Assignment witness_model(const Formula& g, const GadgetOutput& out, std::size_t i) {
  if (i == 0 || i > g.size()) {
    throw IndexError("clause index " + std::to_string(i) + " outside 1.." + std::to_string(g.size()));
  }
  Assignment omega(out.formula.universe());
  omega.set(out.fresh(indexed("c", i)), true);
  for (const Lit& l : g[i - 1].literals()) omega.set(l.var(), !l.positive());
  return omega;
}

GadgetOutput sat_gadget(const Formula& g) {
  GadgetOutput out;
  FreshVars fresh(g.universe(), out);
  std::vector<Clause> clauses;
  auto selectors = add_guarded(g, "c", fresh, clauses);
  Var a = fresh.take("a");
  Clause wide = wide_clause(selectors, a);
  clauses.push_back(wide);
  out.formula = Formula(std::move(clauses), fresh.universe());
  out.distinguished = {id_of(out.formula, wide)};
  out.params["m"] = static_cast<std::int64_t>(g.size());
  return out;
}

std::pair<GadgetOutput, GadgetOutput> dp_pair(const Formula& g, const Formula& s) {
  auto gv = g.vars();
  for (Var v : s.vars()) {
    if (contains(gv, v)) {
      throw SharedVariablesError("variable " + std::to_string(v.index) + " occurs in both formulas");
    }
  }
  GadgetOutput full;
  FreshVars fresh(std::max(g.universe(), s.universe()), full);
  std::vector<Clause> g_part;
  auto c = add_guarded(g, "c", fresh, g_part);
  Var a = fresh.take("a");
  Clause g_wide = wide_clause(c, a);
  g_part.push_back(g_wide);
  std::vector<Clause> s_part;
  auto d = add_guarded(s, "d", fresh, s_part);
  Var e = fresh.take("e");
  Clause s_wide = wide_clause(d, e);

  std::vector<Clause> pi = g_part;
  pi.insert(pi.end(), s_part.begin(), s_part.end());
  std::vector<Clause> pi_prime = pi;
  pi.push_back(s_wide);

  full.formula = Formula(std::move(pi), fresh.universe());
  full.distinguished = {id_of(full.formula, g_wide), id_of(full.formula, s_wide)};
  full.params["m_g"] = static_cast<std::int64_t>(g.size());
  full.params["m_s"] = static_cast<std::int64_t>(s.size());

  GadgetOutput sub = full;
  sub.formula = Formula(std::move(pi_prime), fresh.universe());
  sub.distinguished = {id_of(sub.formula, g_wide)};
  return {std::move(full), std::move(sub)};
}

GadgetOutput size_gadget(const Formula& g, const std::vector<Var>& x, const std::vector<Var>& y,
                         bool satisfiable_mode) {
  check_quantifier_split(g, x, y);
  if (x.empty()) throw PreconditionError("size gadget needs at least one existential variable");
  if (g.empty()) throw PreconditionError("size gadget needs at least one clause");
  const std::size_t n = x.size();
  const std::size_t m = g.size();
  const std::size_t r = m + 1;
  const std::size_t k = (r + 2) * n + m;
  const std::size_t t = k + 1;

  GadgetOutput out;
  FreshVars fresh(max_index(g, x, y), out);
  std::vector<std::vector<Var>> xs(n), zs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) xs[i].push_back(fresh.take("x_" + std::to_string(i + 1) + "^" + std::to_string(j + 1)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) zs[i].push_back(fresh.take("z_" + std::to_string(i + 1) + "^" + std::to_string(j + 1)));
  }
  std::vector<Var> z, w, v;
  for (std::size_t i = 0; i < n; ++i) z.push_back(fresh.take(indexed("z", i + 1)));
  for (std::size_t i = 0; i < n; ++i) w.push_back(fresh.take(indexed("w", i + 1)));
  for (std::size_t i = 0; i < t; ++i) v.push_back(fresh.take(indexed("v", i + 1)));
  std::optional<Var> u;
  if (satisfiable_mode) u = fresh.take("u");

  std::vector<std::vector<Lit>> raw;
  // Units x_i^j, z_i^j.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      raw.push_back({Lit::pos(xs[i][j])});
      raw.push_back({Lit::pos(zs[i][j])});
    }
  }
  // x_i^1 & ... & x_i^r -> x_i, and the same for z.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Lit> cx, cz;
    for (std::size_t j = 0; j < r; ++j) {
      cx.push_back(Lit::neg(xs[i][j]));
      cz.push_back(Lit::neg(zs[i][j]));
    }
    cx.push_back(Lit::pos(x[i]));
    cz.push_back(Lit::pos(z[i]));
    raw.push_back(std::move(cx));
    raw.push_back(std::move(cz));
  }
  // x_i -> w_i, z_i -> w_i.
  for (std::size_t i = 0; i < n; ++i) {
    raw.push_back({Lit::neg(x[i]), Lit::pos(w[i])});
    raw.push_back({Lit::neg(z[i]), Lit::pos(w[i])});
  }
  // w_1 & ... & w_n -> gamma_j, positive x_i rewritten to -z_i.
  for (const Clause& gamma : g.clauses()) {
    std::vector<Lit> c;
    for (Var wi : w) c.push_back(Lit::neg(wi));
    for (const Lit& l : gamma.literals()) {
      auto it = std::find(x.begin(), x.end(), l.var());
      if (l.positive() && it != x.end()) {
        c.push_back(Lit::neg(z[static_cast<std::size_t>(it - x.begin())]));
      } else {
        c.push_back(l);
      }
    }
    raw.push_back(std::move(c));
  }
  // v_1, ..., v_t and -v_1 | ... | -v_t.
  std::vector<Lit> all_v;
  for (Var vi : v) {
    raw.push_back({Lit::pos(vi)});
    all_v.push_back(Lit::neg(vi));
  }
  raw.push_back(std::move(all_v));

  std::vector<Clause> clauses;
  for (auto& c : raw) {
    if (u) c.push_back(Lit::pos(*u));
    clauses.push_back(Clause::make(std::move(c)));
  }
  out.formula = Formula(std::move(clauses), fresh.universe());
  out.params = {{"n", static_cast<std::int64_t>(n)},
                {"m", static_cast<std::int64_t>(m)},
                {"r", static_cast<std::int64_t>(r)},
                {"k", static_cast<std::int64_t>(k)},
                {"t", static_cast<std::int64_t>(t)}};
  return out;
}

GadgetOutput usefulness_gadget(const Formula& g, const std::vector<Var>& x, const std::vector<Var>& y) {
  check_quantifier_split(g, x, y);
  GadgetOutput out;
  FreshVars fresh(max_index(g, x, y), out);
  Var w = fresh.take("w");
  std::vector<Clause> clauses;
  for (Var xi : x) {
    clauses.push_back(Clause::make({Lit::pos(xi)}));
    clauses.push_back(Clause::make({Lit::neg(xi)}));
  }
  Clause unit_w = Clause::make({Lit::pos(w)});
  clauses.push_back(unit_w);
  for (const Clause& gamma : g.clauses()) clauses.push_back(Clause::make(with(gamma.literals(), {Lit::neg(w)})));
  out.formula = Formula(std::move(clauses), fresh.universe());
  out.distinguished = {id_of(out.formula, unit_w)};
  out.params = {{"n", static_cast<std::int64_t>(x.size())}, {"m", static_cast<std::int64_t>(g.size())}};
  return out;
}

GadgetOutput var_gadget(const Formula& s, const std::vector<Var>& x) {
  auto sv = s.vars();
  for (Var v : x) {
    if (!contains(sv, v)) {
      throw PreconditionError("scope variable " + std::to_string(v.index) + " does not occur in the base");
    }
  }
  GadgetOutput out;
  FreshVars fresh(s.universe(), out);
  Var a = fresh.take("a");
  std::vector<Clause> clauses;
  for (const Clause& sigma : s.clauses()) clauses.push_back(Clause::make(with(sigma.literals(), {Lit::neg(a)})));
  Clause unit_a = Clause::make({Lit::pos(a)});
  clauses.push_back(unit_a);
  out.formula = Formula(std::move(clauses), fresh.universe());
  out.distinguished = {id_of(out.formula, unit_a)};
  out.scope = x;
  std::sort(out.scope.begin(), out.scope.end());
  out.params = {{"m", static_cast<std::int64_t>(s.size())}};
  return out;
}

GadgetOutput cond_clause_gadget(const Formula& p) {
  for (const Clause& c : p.clauses()) {
    if (c.empty()) throw PreconditionError("base formula contains the empty clause");
  }
  GadgetOutput out;
  FreshVars fresh(p.universe(), out);
  Var a = fresh.take("a");
  std::vector<Clause> clauses;
  for (const Clause& gamma : p.clauses()) clauses.push_back(Clause::make(with(gamma.literals(), {Lit::pos(a)})));
  Clause unit_a = Clause::make({Lit::pos(a)});
  clauses.push_back(unit_a);
  out.formula = Formula(std::move(clauses), fresh.universe());
  out.distinguished = {id_of(out.formula, unit_a)};
  out.params = {{"m", static_cast<std::int64_t>(p.size())}};
  return out;
}

GadgetOutput cond_set_gadget(const Formula& p) {
  if (p.empty()) throw PreconditionError("base formula must have at least one clause");
  GadgetOutput out;
  FreshVars fresh(p.universe(), out);
  std::vector<Var> c;
  for (std::size_t i = 0; i < p.size(); ++i) c.push_back(fresh.take(indexed("c", i + 1)));
  Var a = fresh.take("a");
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < p.size(); ++i) {
    clauses.push_back(Clause::make(with(p[i].literals(), {Lit::neg(c[i]), Lit::pos(a)})));
  }
  for (std::size_t i = 0; i < p.size(); ++i) clauses.push_back(Clause::make({Lit::pos(c[i]), Lit::pos(a)}));
  Clause unit_a = Clause::make({Lit::pos(a)});
  clauses.push_back(unit_a);
  out.formula = Formula(std::move(clauses), fresh.universe());
  out.distinguished = {id_of(out.formula, unit_a)};
  out.params = {{"m", static_cast<std::int64_t>(p.size())}};
  return out;
}

Formula exponential_family(std::size_t n) {
  if (n == 0) throw PreconditionError("exponential family needs n >= 1");
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < n; ++i) {
    int a = static_cast<int>(3 * i + 1), b = a + 1, c = a + 2;
    clauses.push_back(Clause::of({a, -b}));
    clauses.push_back(Clause::of({-a, b}));
    clauses.push_back(Clause::of({a, c}));
    clauses.push_back(Clause::of({b, c}));
  }
  return Formula(std::move(clauses), static_cast<std::uint32_t>(3 * n));
}

}  // namespace irred
