#ifndef IRRED_CNF_HPP
#define IRRED_CNF_HPP

// Literals, clauses, clause sets and assignments.
//
// Every value here is immutable once built.  Clauses are kept in canonical
// form (ascending variable, negative before positive) and can never be
// tautological; formulas are ordered sets of distinct clauses whose
// identifiers are their rank after deduplication.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace irred {

struct Var {
  std::uint32_t index = 0;  // >= 1

  friend auto operator<=>(const Var&, const Var&) = default;
};

class Lit {
 public:
  constexpr Lit() = default;
  constexpr Lit(Var v, bool positive) : var_(v), positive_(positive) {}

  static constexpr Lit pos(Var v) { return {v, true}; }
  static constexpr Lit neg(Var v) { return {v, false}; }
  // Signed DIMACS integer, must be non-zero.
  static Lit from_dimacs(int value);

  constexpr Var var() const { return var_; }
  constexpr bool positive() const { return positive_; }
  int to_dimacs() const {
    return positive_ ? static_cast<int>(var_.index) : -static_cast<int>(var_.index);
  }

  constexpr Lit operator~() const { return {var_, !positive_}; }

  friend constexpr bool operator==(const Lit&, const Lit&) = default;
  friend constexpr std::strong_ordering operator<=>(const Lit& a, const Lit& b) {
    if (auto c = a.var_.index <=> b.var_.index; c != 0) return c;
    return a.positive_ <=> b.positive_;
  }

 private:
  Var var_{};
  bool positive_ = false;
};

using ClauseId = std::size_t;
using ClauseIdSet = std::vector<ClauseId>;  // kept sorted ascending

class Clause {
 public:
  // The empty clause.
  Clause() = default;

  // Canonicalizes and removes duplicate literals.  Throws TautologyError on a
  // complementary pair.
  static Clause make(std::vector<Lit> literals);
  // Convenience for signed DIMACS integers.
  static Clause of(std::initializer_list<int> dimacs);

  std::span<const Lit> literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool contains(Lit l) const;
  Var max_var() const { return lits_.empty() ? Var{0} : lits_.back().var(); }

  std::string to_string() const;  // "1 -2" style, "()" when empty

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause& a, const Clause& b) { return a.lits_ <=> b.lits_; }

 private:
  explicit Clause(std::vector<Lit> canonical) : lits_(std::move(canonical)) {}
  std::vector<Lit> lits_;
};

// Spelled-out constructor matching the rest of the API.
inline Clause mk_clause(std::vector<Lit> literals) { return Clause::make(std::move(literals)); }

class Formula {
 public:
  Formula() = default;
  // Drops repeated clauses, keeping first occurrences in order.  The universe
  // is raised to the largest variable mentioned.
  explicit Formula(std::vector<Clause> clauses, std::uint32_t universe = 0);
  static Formula of(std::initializer_list<std::initializer_list<int>> dimacs,
                    std::uint32_t universe = 0);

  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  std::uint32_t universe() const { return universe_; }
  std::span<const Clause> clauses() const { return clauses_; }
  // Throws UnknownClauseId.
  const Clause& clause(ClauseId id) const;
  const Clause& operator[](ClauseId id) const { return clauses_[id]; }
  std::optional<ClauseId> find(const Clause& c) const;
  // Number of repeated input clauses collapsed by the constructor.
  std::size_t duplicates_dropped() const { return duplicates_; }

  // Sub-formulas keep the universe of the parent; clause ids are renumbered.
  Formula without(ClauseId id) const;
  Formula select(std::span<const ClauseId> ids) const;
  Formula with_universe(std::uint32_t universe) const;

  std::vector<Var> vars() const;  // variables actually mentioned, ascending
  ClauseIdSet all_ids() const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.universe_ == b.universe_ && a.clauses_ == b.clauses_;
  }

 private:
  std::vector<Clause> clauses_;
  std::uint32_t universe_ = 0;
  std::size_t duplicates_ = 0;
};

// Total assignment over variables 1..universe.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::uint32_t universe) : values_(universe, false) {}
  // Variables listed in `true_vars` are true, all others false.
  static Assignment from_true(std::uint32_t universe, std::span<const Var> true_vars);

  std::uint32_t universe() const { return static_cast<std::uint32_t>(values_.size()); }
  // Throws ScopeError outside the universe.
  bool value(Var v) const;
  void set(Var v, bool value);
  bool value(Lit l) const { return value(l.var()) == l.positive(); }

  bool satisfies(const Clause& c) const;
  bool satisfies(const Formula& f) const;
  // Signed DIMACS literals, one per variable.
  std::vector<int> to_dimacs() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment& a, const Assignment& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<bool> values_;
};

// Assignment defined on a declared subset of the variables.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  // Throws PreconditionError when a variable is listed twice.
  explicit PartialAssignment(std::vector<std::pair<Var, bool>> values);

  std::span<const Lit> literals() const { return lits_; }
  std::vector<Var> scope() const;
  std::optional<bool> value(Var v) const;

 private:
  std::vector<Lit> lits_;  // sorted by variable
};

}  // namespace irred

#endif  // IRRED_CNF_HPP
