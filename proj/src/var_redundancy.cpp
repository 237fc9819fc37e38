#include "irred/var_redundancy.hpp"

#include <algorithm>
#include <string>

#include "irred/errors.hpp"
#include "irred/redundancy.hpp"
#include "irred/sat.hpp"

namespace irred {
namespace {

void check_cap(const VarScope& v, std::size_t cap) {
  if (v.vars.size() > cap) {
    throw CapExceeded("variable scope of size " + std::to_string(v.vars.size()) +
                      " exceeds cap " + std::to_string(cap));
  }
}

// Literals fixing V to the point encoded by `bits` (first variable most
// significant).
std::vector<Lit> point(const VarScope& v, std::uint64_t bits) {
  const std::size_t n = v.vars.size();
  std::vector<Lit> lits;
  lits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) lits.emplace_back(v.vars[i], ((bits >> (n - 1 - i)) & 1) != 0);
  return lits;
}

bool consistent(const Formula& f, std::span<const Lit> lits) {
  Solver s(f.universe());
  s.add_formula(f);
  for (const Lit& l : lits) s.add_unit(l);
  return s.solve().sat();
}

}  // namespace

VarScope::VarScope(std::vector<Var> v) : vars(std::move(v)) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
}

VarScope VarScope::of(std::initializer_list<std::uint32_t> indices) {
  std::vector<Var> v;
  for (auto i : indices) v.push_back(Var{i});
  return VarScope(std::move(v));
}

bool is_var_model(const PartialAssignment& omega, const Formula& pi) {
  for (const Lit& l : omega.literals()) {
    if (l.var().index > pi.universe()) {
      throw ScopeError("var-model assigns variable " + std::to_string(l.var().index) +
                       " outside the formula universe " + std::to_string(pi.universe()));
    }
  }
  return consistent(pi, omega.literals());
}

bool var_equivalent(const Formula& p1, const Formula& p2, const VarScope& v, std::size_t cap) {
  check_cap(v, cap);
  const std::uint32_t universe = std::max(p1.universe(), p2.universe());
  for (Var x : v.vars) {
    if (x.index == 0 || x.index > universe) {
      throw ScopeError("scope variable " + std::to_string(x.index) + " outside the universe");
    }
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << v.vars.size()); ++bits) {
    auto lits = point(v, bits);
    if (consistent(p1, lits) != consistent(p2, lits)) return false;
  }
  return true;
}

bool is_clause_var_redundant(const Formula& pi, ClauseId id, const VarScope& v, std::size_t cap) {
  pi.clause(id);
  return var_equivalent(pi.without(id), pi, v, cap);
}

ClauseIdSet var_redundant_clauses(const Formula& pi, const VarScope& v, std::size_t cap) {
  check_cap(v, cap);
  ClauseIdSet out;
  for (ClauseId id = 0; id < pi.size(); ++id) {
    if (is_clause_var_redundant(pi, id, v, cap)) out.push_back(id);
  }
  return out;
}

bool is_formula_var_redundant(const Formula& pi, const VarScope& v, std::size_t cap) {
  check_cap(v, cap);
  for (ClauseId id = 0; id < pi.size(); ++id) {
    if (is_clause_var_redundant(pi, id, v, cap)) return true;
  }
  return false;
}

Formula forget(const Formula& pi, const VarScope& v, std::size_t cap) {
  check_cap(v, cap);
  for (Var x : v.vars) {
    if (x.index == 0 || x.index > pi.universe()) {
      throw ScopeError("scope variable " + std::to_string(x.index) + " outside the universe");
    }
  }
  // The full-width clause falsified exactly by a point of V is entailed iff
  // that point is not a var-model.
  std::vector<Clause> implied;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << v.vars.size()); ++bits) {
    auto lits = point(v, bits);
    if (consistent(pi, lits)) continue;
    std::vector<Lit> negated;
    negated.reserve(lits.size());
    for (const Lit& l : lits) negated.push_back(~l);
    implied.push_back(Clause::make(std::move(negated)));
  }
  std::sort(implied.begin(), implied.end());
  Formula full(std::move(implied), pi.universe());
  return full.select(greedy_ies(full));
}

}  // namespace irred
