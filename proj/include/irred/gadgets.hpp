#ifndef IRRED_GADGETS_HPP
#define IRRED_GADGETS_HPP

// Formulas built from a base instance so that a redundancy property of the
// result coincides with a satisfiability or exists-forall property of the
// base.  They double as labelled test corpora.
//
// Fresh variables are numbered contiguously above the input universe in the
// order listed in `fresh_vars`.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "irred/cnf.hpp"

namespace irred {

struct GadgetOutput {
  Formula formula;
  // role name -> variable, in allocation order
  std::vector<std::pair<std::string, Var>> fresh_vars;
  ClauseIdSet distinguished;
  std::map<std::string, std::int64_t> params;
  std::vector<Var> scope;  // query variables, for the var-redundancy gadget

  Var fresh(const std::string& role) const;  // throws PreconditionError if unknown
};

// {-c_i | gamma_i}: every clause guarded by its own fresh selector c_i.
GadgetOutput irredundant_version(const Formula& g);

// The assignment with c_i true, every other selector false, every literal of
// clause i false and all remaining variables false; it falsifies exactly the
// i-th guarded clause.  `i` is 1-based; throws IndexError.
Assignment witness_model(const Formula& g, const GadgetOutput& out, std::size_t i);

// Guarded clauses plus the wide clause (-c_1 | ... | -c_m | -a), which is
// redundant exactly when g is unsatisfiable.  Distinguished: the wide clause.
GadgetOutput sat_gadget(const Formula& g);

// (G[C,a] + S[D,e], G[C,a] + S[D]): the second is an IES of the first iff g
// is satisfiable and s is not.  Throws SharedVariablesError.
std::pair<GadgetOutput, GadgetOutput> dp_pair(const Formula& g, const Formula& s);

// Has an equivalent subset of at most k clauses iff  exists X forall Y . not g.
// With satisfiable_mode every clause also carries a fresh variable u.
// Throws PreconditionError unless X, Y are disjoint, cover vars(g), and both
// |X| and |g| are at least 1.
GadgetOutput size_gadget(const Formula& g, const std::vector<Var>& x, const std::vector<Var>& y,
                         bool satisfiable_mode = false);

// {x_i}, {-x_i} for each x_i in X, {w}, and {-w | gamma_i}: the clause w is in
// some IES iff  exists X forall Y . not g.  Distinguished: (w).
GadgetOutput usefulness_gadget(const Formula& g, const std::vector<Var>& x,
                               const std::vector<Var>& y);

// {-a | sigma_i} + {a}: (a) is var-redundant w.r.t. X iff  forall X exists Y . s.
// Throws PreconditionError unless X is within vars(s).  Distinguished: (a).
GadgetOutput var_gadget(const Formula& s, const std::vector<Var>& x);

// {a | gamma_i} + {a}: (a) is conditionally redundant iff p is unsatisfiable.
// An empty clause in p would collapse onto (a), so p must not contain one
// (PreconditionError).
GadgetOutput cond_clause_gadget(const Formula& p);

// {-c_i | a | gamma_i} + {c_i | a} + {a}: the set has a conditionally redundant
// clause iff p is unsatisfiable.  Throws PreconditionError on empty p.
GadgetOutput cond_set_gadget(const Formula& p);

// n disjoint copies of {a | -b, -a | b, a | c, b | c} over variables
// (3i+1, 3i+2, 3i+3); 2^n IESs.  Throws PreconditionError for n == 0.
Formula exponential_family(std::size_t n);

}  // namespace irred

#endif  // IRRED_GADGETS_HPP
