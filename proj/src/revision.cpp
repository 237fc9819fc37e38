#include "irred/revision.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "irred/errors.hpp"
#include "irred/sat.hpp"

namespace irred {
namespace {

bool subset_of(const ClauseIdSet& a, const ClauseIdSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<ClauseIdSet> maximal_only(std::vector<ClauseIdSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ClauseIdSet> out;
  for (const auto& s : sets) {
    bool dominated = std::any_of(sets.begin(), sets.end(), [&](const ClauseIdSet& t) {
      return t.size() > s.size() && subset_of(s, t);
    });
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<Var> range_vars(std::uint32_t n) {
  std::vector<Var> vars;
  for (std::uint32_t i = 1; i <= n; ++i) vars.push_back(Var{i});
  return vars;
}

void require_consistent(const Formula& gamma) {
  if (!solve(gamma).sat()) throw InconsistentRevisor("revising formula is unsatisfiable");
}

Lit shifted(Lit l, std::uint32_t offset) { return Lit(Var{l.var().index + offset}, l.positive()); }

}  // namespace

ClauseIdSet satisfied_subset(const Formula& pi, const Assignment& omega) {
  ClauseIdSet out;
  for (ClauseId i = 0; i < pi.size(); ++i) {
    if (omega.satisfies(pi[i])) out.push_back(i);
  }
  return out;
}

std::vector<ClauseIdSet> max_consistent_subsets(const Formula& pi, const Formula& gamma,
                                                std::size_t cap) {
  const std::uint32_t universe = std::max(pi.universe(), gamma.universe());
  if (universe > cap) {
    throw CapExceeded("revision over " + std::to_string(universe) + " variables exceeds cap " +
                      std::to_string(cap));
  }
  require_consistent(gamma);
  auto vars = range_vars(universe);
  std::vector<ClauseIdSet> sets;
  for (const Assignment& m : enumerate_models(gamma, vars, cap)) sets.push_back(satisfied_subset(pi, m));
  return maximal_only(std::move(sets));
}

std::vector<ClauseIdSet> max_consistent_subsets_by_search(const Formula& pi, const Formula& gamma) {
  require_consistent(gamma);
  const std::uint32_t base = std::max(pi.universe(), gamma.universe());
  // Selector s_i = base + 1 + i forces clause i when true.
  auto selector = [&](ClauseId i) { return Var{base + 1 + static_cast<std::uint32_t>(i)}; };

  auto consistent_with = [&](const std::vector<char>& keep) {
    Solver s(base);
    s.add_formula(gamma);
    for (ClauseId i = 0; i < pi.size(); ++i) {
      if (keep[i]) s.add_clause(pi[i]);
    }
    return s.solve();
  };

  std::vector<ClauseIdSet> found;
  for (;;) {
    Solver s(base + static_cast<std::uint32_t>(pi.size()));
    s.add_formula(gamma);
    for (ClauseId i = 0; i < pi.size(); ++i) {
      std::vector<Lit> guarded(pi[i].literals().begin(), pi[i].literals().end());
      guarded.push_back(Lit::neg(selector(i)));
      s.add_clause(guarded);
    }
    // Each earlier maximal subset M: some clause outside M must be kept.
    for (const ClauseIdSet& m : found) {
      std::vector<Lit> block;
      for (ClauseId i = 0; i < pi.size(); ++i) {
        if (!std::binary_search(m.begin(), m.end(), i)) block.push_back(Lit::pos(selector(i)));
      }
      s.add_clause(block);
    }
    SatResult r = s.solve();
    if (!r.sat()) break;

    std::vector<char> keep(pi.size(), 0);
    for (ClauseId i = 0; i < pi.size(); ++i) keep[i] = r.model->satisfies(pi[i]) ? 1 : 0;
    for (ClauseId i = 0; i < pi.size(); ++i) {
      if (keep[i]) continue;
      keep[i] = 1;
      SatResult grown = consistent_with(keep);
      if (!grown.sat()) {
        keep[i] = 0;
        continue;
      }
      for (ClauseId j = 0; j < pi.size(); ++j) {
        if (grown.model->satisfies(pi[j])) keep[j] = 1;
      }
    }
    ClauseIdSet m;
    for (ClauseId i = 0; i < pi.size(); ++i) {
      if (keep[i]) m.push_back(i);
    }
    found.push_back(std::move(m));
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool RevisionOutcome::admits(const Assignment& omega) const {
  return std::binary_search(models.begin(), models.end(), omega);
}

RevisionOutcome revise(const Formula& pi, const Formula& gamma, std::size_t cap) {
  RevisionOutcome out;
  out.maximal_subsets = max_consistent_subsets(pi, gamma, cap);
  if (max_consistent_subsets_by_search(pi, gamma) != out.maximal_subsets) {
    throw std::logic_error("maximal consistent subsets disagree between constructions");
  }
  out.universe = std::max(pi.universe(), gamma.universe());
  auto vars = range_vars(out.universe);
  for (Assignment& m : enumerate_models(gamma, vars, cap)) {
    ClauseIdSet s = satisfied_subset(pi, m);
    if (std::binary_search(out.maximal_subsets.begin(), out.maximal_subsets.end(), s)) {
      out.models.push_back(std::move(m));
    }
  }
  std::sort(out.models.begin(), out.models.end());
  return out;
}

std::optional<WitnessPair> cond_irredundancy_witness(const Formula& pi, ClauseId id) {
  const Clause& target = pi.clause(id);
  const std::uint32_t n = pi.universe();
  // Variables 1..n carry omega, n+1..2n carry omega_prime.
  Solver s(2 * n);
  s.add_clause(target);
  for (const Lit& l : target.literals()) s.add_unit(~shifted(l, n));
  for (ClauseId j = 0; j < pi.size(); ++j) {
    if (j == id) continue;
    // delta(omega) -> delta(omega_prime), one clause per literal of delta.
    const Clause& delta = pi[j];
    for (const Lit& l : delta.literals()) {
      std::vector<Lit> c{~l};
      for (const Lit& m : delta.literals()) c.push_back(shifted(m, n));
      s.add_clause(c);
    }
  }
  SatResult r = s.solve();
  if (!r.sat()) return std::nullopt;
  WitnessPair w{Assignment(n), Assignment(n)};
  for (std::uint32_t v = 1; v <= n; ++v) {
    w.omega.set(Var{v}, r.model->value(Var{v}));
    w.omega_prime.set(Var{v}, r.model->value(Var{v + n}));
  }
  return w;
}

bool is_clause_cond_redundant(const Formula& pi, ClauseId id) {
  return !cond_irredundancy_witness(pi, id).has_value();
}

ClauseIdSet cond_redundant_clauses(const Formula& pi) {
  ClauseIdSet out;
  for (ClauseId id = 0; id < pi.size(); ++id) {
    if (is_clause_cond_redundant(pi, id)) out.push_back(id);
  }
  return out;
}

bool is_formula_cond_redundant(const Formula& pi) {
  for (ClauseId id = 0; id < pi.size(); ++id) {
    if (is_clause_cond_redundant(pi, id)) return true;
  }
  return false;
}

}  // namespace irred
