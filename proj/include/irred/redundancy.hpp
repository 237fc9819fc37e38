#ifndef IRRED_REDUNDANCY_HPP
#define IRRED_REDUNDANCY_HPP

// Redundancy under classical equivalence.
//
// A clause is redundant when the rest of its formula entails it.  An
// irredundant equivalent subset (IES) is a subset equivalent to the whole
// formula with no redundant clause.  Clause ids in every result refer to the
// input formula.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "irred/cnf.hpp"

namespace irred {

enum class ClauseStatus { Necessary, UsefulNotNecessary, Useless };

const char* to_string(ClauseStatus s);

struct IesReport {
  std::vector<ClauseIdSet> ies_list;  // sorted lexicographically, pairwise distinct
  bool unique = false;                // exactly one IES and the list is complete
  bool truncated = false;             // the cap stopped enumeration early
};

struct ClassificationReport {
  std::vector<ClauseStatus> statuses;  // indexed by ClauseId
  ClauseIdSet necessary_set;
  std::size_t ies_count = 0;           // lower bound when ies_count_truncated
  bool ies_count_truncated = false;
};

inline constexpr std::size_t kDefaultIesCap = 256;

// Subset-level entailment: the clauses listed in `ids` entail clause `target`.
bool subset_entails(const Formula& pi, std::span<const ClauseId> ids, const Clause& target);
bool subset_equivalent(const Formula& pi, std::span<const ClauseId> ids);

// Throws UnknownClauseId.
bool is_clause_redundant(const Formula& pi, ClauseId id);
bool is_formula_redundant(const Formula& pi);
// A clause is in every IES exactly when the others do not entail it.
bool is_clause_necessary(const Formula& pi, ClauseId id);
ClauseIdSet necessary_clauses(const Formula& pi);

// Repeated passes in `order` (default ascending id), dropping each clause the
// current remainder still entails, until a pass removes nothing.  Throws
// PreconditionError if `order` is not a permutation of the clause ids.
ClauseIdSet greedy_ies(const Formula& pi, std::optional<std::span<const ClauseId>> order = {});

// candidate is a subset of pi (as clause sets), equivalent to it, and irredundant.
bool is_ies(const Formula& candidate, const Formula& pi);
bool is_ies(const Formula& pi, std::span<const ClauseId> ids);

IesReport enumerate_ies(const Formula& pi, std::size_t cap = kDefaultIesCap);

struct MinimumSubset {
  std::size_t size = 0;
  ClauseIdSet witness;  // an equivalent subset of that size
};

// Smallest equivalent subset.  With `limit`, returns nullopt as soon as it is
// known that no equivalent subset of size <= *limit exists.
std::optional<MinimumSubset> minimum_equivalent_subset(const Formula& pi,
                                                       std::optional<std::size_t> limit = {});
std::size_t min_ies_size(const Formula& pi);
bool has_ies_of_size(const Formula& pi, std::size_t k);

// Some IES contains the clause.  Throws UnknownClauseId.
bool is_clause_useful(const Formula& pi, ClauseId id);
// An IES containing the clause, when one exists.
std::optional<ClauseIdSet> useful_witness(const Formula& pi, ClauseId id);

ClassificationReport classify_clauses(const Formula& pi, std::size_t ies_cap = kDefaultIesCap);
bool has_unique_ies(const Formula& pi);

// First pair (ascending ids) of individually removable clauses that cannot be
// removed together.  Presence proves at least two IESs; absence proves nothing.
std::optional<std::pair<ClauseId, ClauseId>> two_ies_witness(const Formula& pi);

}  // namespace irred

#endif  // IRRED_REDUNDANCY_HPP
