#include <algorithm>
#include <random>

#include "doctest.h"
#include "irred/errors.hpp"
#include "irred/gadgets.hpp"
#include "irred/redundancy.hpp"
#include "support/oracle.hpp"
#include "support/random_cnf.hpp"

using namespace irred;

namespace {

// a=1 b=2 c=3 d=4
const Formula kTwoIes = Formula::of({{1, -2}, {-1, 2}, {1, 3}, {2, 3}});
const Formula kTriple = Formula::of({{1, 2}, {1, -2}, {1, 3}});
const Formula kSeven = Formula::of({{-1, 2}, {1, -2}, {-1, 3}, {1, -3}, {1, 4}, {2, 4}, {3, 4}});
const Formula kIrredundant = Formula::of({{1, -2}, {-1, 2}});
const Formula kSubsumed = Formula::of({{1}, {1, 2}});

bool contains(const ClauseIdSet& s, ClauseId id) { return std::binary_search(s.begin(), s.end(), id); }

}  // namespace

TEST_CASE("is_clause_redundant") {
  CHECK(is_clause_redundant(kTwoIes, 2));
  CHECK(is_clause_redundant(kTwoIes, 3));
  CHECK_FALSE(is_clause_redundant(kTwoIes, 0));
  CHECK_FALSE(is_clause_redundant(Formula::of({{1}, {2}}), 0));
  CHECK(is_clause_redundant(kSubsumed, 1));
  CHECK_THROWS_AS(is_clause_redundant(kTwoIes, 4), UnknownClauseId);
}

TEST_CASE("is_formula_redundant") {
  CHECK(is_formula_redundant(kTwoIes));
  CHECK_FALSE(is_formula_redundant(kIrredundant));
  CHECK_FALSE(is_formula_redundant(Formula{}));
}

TEST_CASE("is_clause_necessary") {
  CHECK(is_clause_necessary(kTwoIes, 0));
  CHECK(is_clause_necessary(kTwoIes, 1));
  CHECK_FALSE(is_clause_necessary(kTwoIes, 2));
  CHECK_FALSE(is_clause_necessary(kTriple, 2));
  CHECK(necessary_clauses(kTwoIes) == ClauseIdSet{0, 1});
  CHECK_THROWS_AS(is_clause_necessary(kTwoIes, 9), UnknownClauseId);
}

TEST_CASE("greedy_ies") {
  CHECK(greedy_ies(kTwoIes) == ClauseIdSet{0, 1, 3});
  CHECK(greedy_ies(kIrredundant) == ClauseIdSet{0, 1});
  CHECK(greedy_ies(kSubsumed) == ClauseIdSet{0});

  std::vector<ClauseId> rev{3, 2, 1, 0};
  CHECK(greedy_ies(kTwoIes, rev) == ClauseIdSet{0, 1, 2});

  std::vector<ClauseId> bad{0, 1, 1, 3};
  CHECK_THROWS_AS(greedy_ies(kTwoIes, bad), PreconditionError);
  std::vector<ClauseId> short_order{0, 1};
  CHECK_THROWS_AS(greedy_ies(kTwoIes, short_order), PreconditionError);
}

TEST_CASE("is_ies") {
  CHECK(is_ies(kTwoIes.without(2), kTwoIes));
  CHECK(is_ies(kTwoIes.without(3), kTwoIes));
  CHECK(is_ies(kIrredundant, kIrredundant));
  CHECK_FALSE(is_ies(kIrredundant, kTwoIes));
  CHECK_FALSE(is_ies(kTwoIes, kTwoIes));
  // not a subset
  CHECK_FALSE(is_ies(Formula::of({{1}}), kSubsumed.without(0)));

  std::vector<ClauseId> ids{0, 1, 3};
  CHECK(is_ies(kTwoIes, ids));
}

TEST_CASE("enumerate_ies") {
  IesReport ex = enumerate_ies(kTwoIes);
  CHECK(ex.ies_list == std::vector<ClauseIdSet>{{0, 1, 2}, {0, 1, 3}});
  CHECK_FALSE(ex.unique);
  CHECK_FALSE(ex.truncated);

  IesReport seven = enumerate_ies(kSeven);
  CHECK(seven.ies_list ==
        std::vector<ClauseIdSet>{{0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}, {0, 1, 2, 3, 6}});

  CHECK(enumerate_ies(exponential_family(2)).ies_list.size() == 4);
  CHECK(enumerate_ies(exponential_family(3)).ies_list.size() == 8);

  IesReport triple = enumerate_ies(kTriple);
  CHECK(triple.ies_list == std::vector<ClauseIdSet>{{0, 1}});
  CHECK(triple.unique);

  IesReport capped = enumerate_ies(exponential_family(3), 5);
  CHECK(capped.truncated);
  CHECK(capped.ies_list.size() == 5);
  CHECK_FALSE(capped.unique);

  IesReport empty = enumerate_ies(Formula{});
  CHECK(empty.ies_list == std::vector<ClauseIdSet>{{}});
  CHECK(empty.unique);
}

TEST_CASE("min_ies_size and has_ies_of_size") {
  CHECK(min_ies_size(kTwoIes) == 3);
  CHECK(min_ies_size(kIrredundant) == 2);
  CHECK(min_ies_size(kSubsumed) == 1);
  CHECK(min_ies_size(Formula{}) == 0);
  CHECK(has_ies_of_size(kTwoIes, 3));
  CHECK_FALSE(has_ies_of_size(kTwoIes, 2));
  CHECK(has_ies_of_size(kSeven, kSeven.size()));

  auto m = minimum_equivalent_subset(kTwoIes);
  REQUIRE(m);
  CHECK(m->size == 3);
  CHECK(subset_equivalent(kTwoIes, m->witness));
  CHECK_FALSE(minimum_equivalent_subset(kTwoIes, 2));
}

TEST_CASE("min_ies_size on unsatisfiable inputs") {
  // Any unsatisfiable subset will do.
  Formula f = Formula::of({{1}, {-1}, {1, 2}, {-1, 2}, {-2}});
  CHECK(min_ies_size(f) == oracle::min_equivalent_size(f));
  CHECK(min_ies_size(f) == 2);
  CHECK(min_ies_size(Formula::of({{1}, {}})) == 1);
}

TEST_CASE("is_clause_useful") {
  CHECK(is_clause_useful(kTwoIes, 2));
  CHECK(is_clause_useful(kTwoIes, 0));
  CHECK_FALSE(is_clause_useful(kTriple, 2));
  CHECK(is_clause_useful(kSeven, 6));
  CHECK_THROWS_AS(is_clause_useful(kTwoIes, 4), UnknownClauseId);

  auto w = useful_witness(kTwoIes, 3);
  REQUIRE(w);
  CHECK(contains(*w, 3));
  CHECK(is_ies(kTwoIes, *w));
  CHECK_FALSE(useful_witness(kTriple, 2));
}

TEST_CASE("classify_clauses") {
  using S = ClauseStatus;
  ClassificationReport ex = classify_clauses(kTwoIes);
  CHECK(ex.statuses == std::vector<S>{S::Necessary, S::Necessary, S::UsefulNotNecessary,
                                      S::UsefulNotNecessary});
  CHECK(ex.necessary_set == ClauseIdSet{0, 1});
  CHECK(ex.ies_count == 2);

  ClassificationReport tr = classify_clauses(kTriple);
  CHECK(tr.statuses == std::vector<S>{S::Necessary, S::Necessary, S::Useless});

  ClassificationReport irr = classify_clauses(kIrredundant);
  CHECK(irr.statuses == std::vector<S>{S::Necessary, S::Necessary});

  CHECK(std::string(to_string(S::Necessary)) == "necessary");
  CHECK(std::string(to_string(S::UsefulNotNecessary)) == "useful");
  CHECK(std::string(to_string(S::Useless)) == "useless");
}

TEST_CASE("has_unique_ies") {
  CHECK(has_unique_ies(kTriple));
  CHECK_FALSE(has_unique_ies(kTwoIes));
  CHECK(has_unique_ies(kIrredundant));
  CHECK_FALSE(has_unique_ies(kSeven));
}

TEST_CASE("two_ies_witness") {
  auto ex = two_ies_witness(kTwoIes);
  REQUIRE(ex);
  CHECK(*ex == std::pair<ClauseId, ClauseId>{2, 3});
  CHECK_FALSE(two_ies_witness(kSeven));
  CHECK(enumerate_ies(kSeven).ies_list.size() == 3);
  CHECK_FALSE(two_ies_witness(kIrredundant));
}

TEST_CASE("analyses agree with exhaustive enumeration") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 400; ++i) {
    Formula f = testing::random_small_formula(rng, 5, 8);
    auto truth = oracle::all_ies(f);
    IesReport rep = enumerate_ies(f);
    REQUIRE(rep.ies_list == truth);
    for (const auto& s : rep.ies_list) CHECK(is_ies(f, s));

    ClauseIdSet g = greedy_ies(f);
    CHECK(std::find(truth.begin(), truth.end(), g) != truth.end());

    ClassificationReport cr = classify_clauses(f);
    for (ClauseId id = 0; id < f.size(); ++id) {
      auto in = [id](const ClauseIdSet& s) { return contains(s, id); };
      bool all = std::all_of(truth.begin(), truth.end(), in);
      bool any = std::any_of(truth.begin(), truth.end(), in);
      CHECK(is_clause_redundant(f, id) == oracle::clause_redundant(f, id));
      CHECK((cr.statuses[id] == ClauseStatus::Necessary) == all);
      CHECK((cr.statuses[id] == ClauseStatus::Useless) == !any);
      CHECK(is_clause_useful(f, id) == any);
      if (auto w = useful_witness(f, id)) {
        CHECK(contains(*w, id));
        CHECK(is_ies(f, *w));
      }
    }
    for (const auto& s : truth) CHECK(oracle::includes(s, cr.necessary_set));

    CHECK(has_unique_ies(f) == (truth.size() == 1));
    if (two_ies_witness(f)) CHECK(truth.size() >= 2);

    std::size_t min = min_ies_size(f);
    CHECK(min == oracle::min_equivalent_size(f));
    CHECK(min >= cr.necessary_set.size());
    CHECK(has_ies_of_size(f, min));
    if (min > 0) CHECK_FALSE(has_ies_of_size(f, min - 1));

    bool proper = std::any_of(truth.begin(), truth.end(),
                              [&](const ClauseIdSet& s) { return s.size() < f.size(); });
    CHECK(is_formula_redundant(f) == proper);
  }
}

TEST_CASE("greedy_ies is an IES for every order") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    Formula f = testing::random_small_formula(rng, 5, 8);
    std::vector<ClauseId> order = f.all_ids();
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(is_ies(f, greedy_ies(f, order)));
  }
}
