#ifndef IRRED_SAT_HPP
#define IRRED_SAT_HPP

// Complete satisfiability backend shared by every analysis.
//
// Search is plain DPLL: unit propagation over two watched literals and
// chronological backtracking.  Decisions go to the lowest unassigned
// variable, false first, so the model returned for a given clause list is
// always the same.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "irred/cnf.hpp"

namespace irred {

enum class SatStatus { Sat, Unsat };

struct SatResult {
  SatStatus status = SatStatus::Unsat;
  std::optional<Assignment> model;  // present iff Sat

  bool sat() const { return status == SatStatus::Sat; }
};

// Single-use solver.  Clauses may be added until solve() is called; the
// model covers variables 1..max(num_vars, largest variable added).
class Solver {
 public:
  explicit Solver(std::uint32_t num_vars = 0);

  // Duplicate literals are merged and tautologies are skipped.
  void add_clause(std::span<const Lit> lits);
  void add_clause(const Clause& c) { add_clause(c.literals()); }
  void add_formula(const Formula& f);
  void add_unit(Lit l) { add_clause(std::span<const Lit>(&l, 1)); }

  SatResult solve();

 private:
  using Code = std::uint32_t;  // 2 * (var - 1) + positive
  static Code code(Lit l) { return 2 * (l.var().index - 1) + (l.positive() ? 1 : 0); }

  int value(Code c) const {
    int v = assigns_[c >> 1];
    if (v < 0) return -1;
    return (c & 1) ? v : 1 - v;
  }
  void ensure_vars(std::uint32_t n);
  void assign(Code c);
  bool propagate();
  void undo_to(std::size_t trail_size);

  struct Level {
    std::size_t trail_start;
    Code decision;
    bool flipped;
  };

  std::uint32_t num_vars_ = 0;
  bool has_empty_ = false;
  bool used_ = false;
  std::vector<std::vector<Code>> clauses_;
  std::vector<Code> units_;
  std::vector<std::vector<std::uint32_t>> watches_;  // by literal code, clause indices
  std::vector<int> assigns_;                         // -1 unassigned, 0 false, 1 true
  std::vector<Code> trail_;
  std::size_t qhead_ = 0;
  std::vector<Level> levels_;
};

SatResult solve(const Formula& f);

// pi |= gamma, decided by refuting pi together with the negation of gamma.
bool entails(const Formula& pi, const Clause& gamma);
// Every clause of one side is entailed by the other.
bool equivalent(const Formula& p1, const Formula& p2);

// All total assignments over `universe` that satisfy f, in lexicographic
// order (first listed variable most significant, false before true).  Every
// variable of f must be in `universe` (ScopeError otherwise).  Throws
// CapExceeded when |universe| > cap.  Returned assignments span variables
// 1..max(universe), with variables outside `universe` left false.
std::vector<Assignment> enumerate_models(const Formula& f, std::span<const Var> universe,
                                         std::size_t cap = 20);

struct QbfInstance {
  std::vector<Var> existentials;  // X
  std::vector<Var> universals;    // Y
  Formula matrix;                 // Gamma
};

// Truth of  exists X forall Y . not Gamma: some assignment to X leaves Gamma
// unsatisfiable.  Enumerates X (CapExceeded when |X| > cap) with one solver
// call per point.  Throws PreconditionError when X and Y overlap or Gamma
// mentions a variable outside X and Y.
bool eval_exists_forall(const QbfInstance& q, std::size_t cap = 16);

}  // namespace irred

#endif  // IRRED_SAT_HPP
