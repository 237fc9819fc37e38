#include <random>

#include "doctest.h"
#include "irred/cnf.hpp"
#include "irred/dimacs.hpp"
#include "irred/errors.hpp"
#include "irred/gadgets.hpp"
#include "support/random_cnf.hpp"

using namespace irred;

TEST_CASE("mk_clause canonicalizes and rejects tautologies") {
  const Var a{1}, b{2};
  Clause c = mk_clause({Lit::pos(a), Lit::pos(a), Lit::neg(b)});
  CHECK(c.size() == 2);
  CHECK(c == Clause::of({1, -2}));

  CHECK_THROWS_AS(mk_clause({Lit::pos(a), Lit::neg(a)}), TautologyError);

  Clause empty = mk_clause({});
  CHECK(empty.empty());
  CHECK(empty.to_string() == "()");
}

TEST_CASE("literal order puts the negative literal first") {
  CHECK(Lit::neg(Var{3}) < Lit::pos(Var{3}));
  CHECK(Lit::pos(Var{2}) < Lit::neg(Var{3}));
  CHECK(Clause::of({3, -3 + 1, 1}).to_string() == "1 -2 3");
}

TEST_CASE("permuted literal sequences give equal clauses") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    Clause c = testing::random_clause(rng, 6, 4);
    std::vector<Lit> lits(c.literals().begin(), c.literals().end());
    std::shuffle(lits.begin(), lits.end(), rng);
    lits.push_back(lits.front());
    CHECK(mk_clause(lits) == c);
  }
}

TEST_CASE("formulas deduplicate and number clauses contiguously") {
  Formula f = Formula::of({{1}, {2, -1}, {1}, {-1, 2}});
  CHECK(f.size() == 2);
  CHECK(f.duplicates_dropped() == 2);
  CHECK(f[0] == Clause::of({1}));
  CHECK(f[1] == Clause::of({-1, 2}));
  CHECK(f.universe() == 2);
  CHECK_THROWS_AS(f.clause(2), UnknownClauseId);
  CHECK(f.find(Clause::of({2, -1})) == ClauseId{1});
  CHECK_FALSE(f.find(Clause::of({2})).has_value());
}

TEST_CASE("formula universe covers declared and mentioned variables") {
  CHECK(Formula::of({{1, 4}}).universe() == 4);
  CHECK(Formula::of({{1}}, 7).universe() == 7);
  CHECK(Formula::of({{2, 3}}, 5).without(0).universe() == 5);
}

TEST_CASE("assignments evaluate clauses and formulas") {
  Assignment a = Assignment::from_true(3, std::vector<Var>{Var{2}});
  CHECK(a.satisfies(Clause::of({1, 2})));
  CHECK_FALSE(a.satisfies(Clause::of({1, -2, 3})));
  CHECK_FALSE(a.satisfies(Clause{}));
  CHECK(a.satisfies(Formula{}));
  CHECK(a.to_dimacs() == std::vector<int>{-1, 2, -3});
  CHECK_THROWS_AS(a.value(Var{4}), ScopeError);
}

TEST_CASE("partial assignments reject a variable assigned twice") {
  PartialAssignment p({{Var{3}, true}, {Var{1}, false}});
  CHECK(p.scope() == std::vector<Var>{Var{1}, Var{3}});
  CHECK(p.value(Var{3}) == true);
  CHECK_FALSE(p.value(Var{2}).has_value());
  CHECK_THROWS_AS(PartialAssignment({{Var{1}, true}, {Var{1}, false}}), PreconditionError);
}

TEST_CASE("parse_dimacs reads the standard format") {
  auto parsed = parse_dimacs("c example\np cnf 2 2\n1 -2 0\n-1 2 0\n");
  CHECK(parsed.formula == Formula::of({{1, -2}, {-1, 2}}));
  CHECK(parsed.clause_lines == std::vector<std::size_t>{3, 4});
  CHECK(parsed.warnings.empty());
}

TEST_CASE("parse_dimacs collapses duplicate clauses with a warning") {
  auto parsed = parse_dimacs("p cnf 1 2\n1 0\n1 0\n");
  CHECK(parsed.formula == Formula::of({{1}}));
  REQUIRE(parsed.warnings.size() == 1);
  CHECK(parsed.warnings[0].find("duplicate") != std::string::npos);
}

TEST_CASE("parse_dimacs reports the line of a tautological clause") {
  try {
    parse_dimacs("p cnf 1 1\n1 -1 0\n");
    FAIL("expected TautologyError");
  } catch (const TautologyError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("parse_dimacs tolerates layout variations") {
  auto parsed = parse_dimacs("c a\n\np cnf 3 2\n  1  2\n 3 0 -1\n0   \n\n");
  CHECK(parsed.formula == Formula::of({{1, 2, 3}, {-1}}, 3));
  CHECK(parsed.clause_lines == std::vector<std::size_t>{4, 5});
  auto crlf = parse_dimacs("p cnf 1 1\r\n1 0\r\n");
  CHECK(crlf.formula == Formula::of({{1}}));
  auto empty_clause = parse_dimacs("p cnf 1 1\n0\n");
  REQUIRE(empty_clause.formula.size() == 1);
  CHECK(empty_clause.formula[0].empty());
}

TEST_CASE("parse_dimacs rejects malformed input") {
  CHECK_THROWS_AS(parse_dimacs("p cnf x 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p dnf 1 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 b 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs(""), ParseError);
  try {
    parse_dimacs("p cnf 2 2\n1 0\n3 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("parse_dimacs warns on a clause-count mismatch") {
  auto parsed = parse_dimacs("p cnf 2 3\n1 0\n2 0\n");
  CHECK(parsed.formula.size() == 2);
  CHECK(parsed.warnings.size() == 1);
}

TEST_CASE("write_dimacs output") {
  CHECK(write_dimacs(Formula::of({{1}})) == "p cnf 1 1\n1 0\n");
  CHECK(write_dimacs(Formula{}) == "p cnf 0 0\n");
  Formula ex1 = Formula::of({{1, -2}, {-1, 2}, {1, 3}, {2, 3}});
  std::string text = write_dimacs(ex1);
  CHECK(text == "p cnf 3 4\n1 -2 0\n-1 2 0\n1 3 0\n2 3 0\n");
  CHECK(parse_dimacs(text).formula == ex1);
}

TEST_CASE("DIMACS round trip is the identity on random and generated formulas") {
  std::mt19937_64 rng(11);
  std::vector<Formula> corpus;
  for (int i = 0; i < 300; ++i) corpus.push_back(testing::random_small_formula(rng, 8, 10, 4));
  corpus.push_back(exponential_family(3));
  corpus.push_back(sat_gadget(Formula::of({{1, 2}, {-1}})).formula);
  corpus.push_back(size_gadget(Formula::of({{1, 2}}), {Var{1}}, {Var{2}}, true).formula);
  corpus.push_back(Formula::of({{}}, 4));
  for (const Formula& f : corpus) {
    auto back = parse_dimacs(write_dimacs(f));
    CHECK(back.formula == f);
    CHECK(back.warnings.empty());
  }
}
