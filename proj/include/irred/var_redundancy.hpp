#ifndef IRRED_VAR_REDUNDANCY_HPP
#define IRRED_VAR_REDUNDANCY_HPP

// Redundancy relative to queries over a subset V of the variables.
//
// Two formulas are var-equivalent w.r.t. V when they entail the same
// formulas over V, equivalently when the same assignments to V extend to
// models of each.  Everything here enumerates the 2^|V| assignments to V
// with one satisfiability call per point, so |V| is bounded by a cap.

#include <cstddef>
#include <vector>

#include "irred/cnf.hpp"

namespace irred {

struct VarScope {
  std::vector<Var> vars;  // sorted, distinct

  VarScope() = default;
  explicit VarScope(std::vector<Var> v);
  static VarScope of(std::initializer_list<std::uint32_t> indices);
};

inline constexpr std::size_t kDefaultVarCap = 16;

// The literals of omega are consistent with pi.  Throws ScopeError when omega
// assigns a variable outside pi's universe.
bool is_var_model(const PartialAssignment& omega, const Formula& pi);

// Throws CapExceeded when |V| > cap, ScopeError when V reaches past both
// universes.
bool var_equivalent(const Formula& p1, const Formula& p2, const VarScope& v,
                    std::size_t cap = kDefaultVarCap);

bool is_clause_var_redundant(const Formula& pi, ClauseId id, const VarScope& v,
                             std::size_t cap = kDefaultVarCap);
bool is_formula_var_redundant(const Formula& pi, const VarScope& v,
                              std::size_t cap = kDefaultVarCap);
ClauseIdSet var_redundant_clauses(const Formula& pi, const VarScope& v,
                                  std::size_t cap = kDefaultVarCap);

// Conjunction of every clause mentioning all variables of V that pi entails,
// reduced to an IES.  The result only mentions V and keeps pi's universe.
Formula forget(const Formula& pi, const VarScope& v, std::size_t cap = kDefaultVarCap);

}  // namespace irred

#endif  // IRRED_VAR_REDUNDANCY_HPP
