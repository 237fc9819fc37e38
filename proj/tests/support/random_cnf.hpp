#ifndef IRRED_TESTS_RANDOM_CNF_HPP
#define IRRED_TESTS_RANDOM_CNF_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "irred/cnf.hpp"

namespace irred::testing {

// Random non-empty, non-tautological clause over variables 1..vars.
inline Clause random_clause(std::mt19937_64& rng, std::uint32_t vars, std::size_t max_len) {
  std::vector<std::uint32_t> pool(vars);
  for (std::uint32_t i = 0; i < vars; ++i) pool[i] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::size_t len = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(max_len, vars))(rng);
  std::vector<Lit> lits;
  for (std::size_t i = 0; i < len; ++i) lits.emplace_back(Var{pool[i]}, rng() & 1);
  return Clause::make(std::move(lits));
}

// Exactly `vars` variables in the universe and up to `clauses` distinct clauses.
inline Formula random_formula(std::mt19937_64& rng, std::uint32_t vars, std::size_t clauses,
                              std::size_t max_len = 3) {
  std::vector<Clause> cs;
  for (std::size_t i = 0; i < clauses; ++i) cs.push_back(random_clause(rng, vars, max_len));
  return Formula(std::move(cs), vars);
}

// Variable and clause counts drawn uniformly from [1, max_vars] and [0, max_clauses].
inline Formula random_small_formula(std::mt19937_64& rng, std::uint32_t max_vars, std::size_t max_clauses,
                                    std::size_t max_len = 3) {
  auto vars = std::uniform_int_distribution<std::uint32_t>(1, max_vars)(rng);
  auto clauses = std::uniform_int_distribution<std::size_t>(0, max_clauses)(rng);
  return random_formula(rng, vars, clauses, max_len);
}

// Renames variable v to v + offset.
inline Formula shifted(const Formula& f, std::uint32_t offset) {
  std::vector<Clause> cs;
  for (const Clause& c : f.clauses()) {
    std::vector<Lit> lits;
    for (const Lit& l : c.literals()) lits.emplace_back(Var{l.var().index + offset}, l.positive());
    cs.push_back(Clause::make(std::move(lits)));
  }
  return Formula(std::move(cs), f.universe() + offset);
}

}  // namespace irred::testing

#endif  // IRRED_TESTS_RANDOM_CNF_HPP
