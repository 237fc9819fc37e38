#ifndef IRRED_REVISION_HPP
#define IRRED_REVISION_HPP

// Maxcons revision and the redundancy notion it induces.
//
// Revising pi by gamma keeps the maximal subsets of pi consistent with gamma
// and takes their disjunction.  Its models are the models of gamma whose
// satisfied subset of pi is maximal under set containment.  A clause is
// conditionally redundant when dropping it changes no revision outcome, which
// holds exactly when no pair of assignments has satisfied subsets differing
// by that clause alone.

#include <cstddef>
#include <optional>
#include <vector>

#include "irred/cnf.hpp"

namespace irred {

inline constexpr std::size_t kDefaultRevisionCap = 20;

// Ids of the clauses of pi that omega satisfies.
ClauseIdSet satisfied_subset(const Formula& pi, const Assignment& omega);

// Max(pi, gamma) from the satisfied subsets of gamma's models, keeping the
// maximal ones; sorted.  Throws InconsistentRevisor when gamma is
// unsatisfiable and CapExceeded when the joint universe exceeds `cap`.
std::vector<ClauseIdSet> max_consistent_subsets(const Formula& pi, const Formula& gamma,
                                                std::size_t cap = kDefaultRevisionCap);

// Max(pi, gamma) by direct search over subsets of pi: each round finds a
// subset consistent with gamma not contained in any earlier one and grows it
// to a maximal one.  No enumeration cap.  Throws InconsistentRevisor.
std::vector<ClauseIdSet> max_consistent_subsets_by_search(const Formula& pi, const Formula& gamma);

struct RevisionOutcome {
  std::vector<ClauseIdSet> maximal_subsets;
  std::uint32_t universe = 0;       // joint universe of pi and gamma
  std::vector<Assignment> models;   // models of pi * gamma, lexicographic

  bool admits(const Assignment& omega) const;
};

// Computes the family both ways and the model set from it; throws
// std::logic_error if the two constructions disagree.
RevisionOutcome revise(const Formula& pi, const Formula& gamma,
                       std::size_t cap = kDefaultRevisionCap);

struct WitnessPair {
  Assignment omega;        // satisfies the clause
  Assignment omega_prime;  // satisfies every other clause omega satisfies, but not the clause
};

// A pair whose satisfied subsets differ by exactly the queried clause, found
// with one solver call over two disjoint copies of the variables.  Absent iff
// the clause is conditionally redundant.  Throws UnknownClauseId.
std::optional<WitnessPair> cond_irredundancy_witness(const Formula& pi, ClauseId id);

bool is_clause_cond_redundant(const Formula& pi, ClauseId id);
bool is_formula_cond_redundant(const Formula& pi);
ClauseIdSet cond_redundant_clauses(const Formula& pi);

}  // namespace irred

#endif  // IRRED_REVISION_HPP
