#include <doctest.h>

#include <random>

#include "support/helpers.hpp"

using namespace qc;
using qc::test::menu_of;

TEST_SUITE_BEGIN("core");

namespace {

Relation arrows(const GrandSet& g, std::vector<std::pair<int, int>> list) {
  std::vector<Menu> rows(g.n, 0);
  for (auto [from, to] : list) rows[to] = menu_with(rows[to], from);
  return Relation(g, rows);
}

}  // namespace

TEST_CASE("max_set picks the non-dominated items") {
  GrandSet g(3, {"x", "y", "z"});

  // linear order x > y > z
  auto linear = arrows(g, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(max_set(linear, g.full()) == menu_of({0}));

  // pairwise exclusive pair: nothing survives
  auto mutual = arrows(g, {{0, 1}, {1, 0}});
  CHECK(max_set(mutual, menu_of({0, 1})) == 0);

  // repellent item never selected, even alone
  auto loop = arrows(g, {{0, 0}});
  CHECK(max_set(loop, menu_of({0})) == 0);
}

TEST_CASE("ballot_from_voter materializes the whole table") {
  GrandSet g(3, {"x", "y", "z"});

  auto identity = ballot_from_voter(Relation::empty(g));
  for (Menu a = 0; a < g.menu_count(); ++a)
    CHECK(identity.choice.table[a] == a);

  auto null = ballot_from_voter(Relation::all_loops(g));
  for (Menu a = 0; a < g.menu_count(); ++a)
    CHECK(null.choice.table[a] == 0);

  // x -> z with y, z pairwise exclusive
  auto b = ballot_from_voter(arrows(g, {{0, 2}, {1, 2}, {2, 1}}));
  CHECK(b.choice.table[menu_of({0, 1})] == menu_of({0, 1}));
  CHECK(b.choice.table[menu_of({0, 2})] == menu_of({0}));
  CHECK(b.choice.table[menu_of({1, 2})] == 0);
  CHECK(b.choice.table[g.full()] == menu_of({0}));
  CHECK(b.choice.table[menu_of({0})] == menu_of({0}));
  CHECK(b.choice.table[menu_of({1})] == menu_of({1}));
  CHECK(b.choice.table[menu_of({2})] == menu_of({2}));
}

TEST_CASE("revealed_relation inverts singleton and pair behavior") {
  GrandSet g(3, {"x", "y", "z"});

  CHECK(revealed_relation(identity_choice(g)) == Relation::empty(g));
  CHECK(revealed_relation(null_choice(g)) == Relation::all_loops(g));

  std::vector<Menu> table(8);
  for (Menu a = 0; a < 8; ++a) table[a] = a;
  table[menu_of({0, 2})] = menu_of({0});
  QuasiChoice c(g, table);
  auto rel = revealed_relation(c);
  CHECK(rel == arrows(g, {{0, 2}}));
}

TEST_CASE("replicate concatenates whole copies") {
  GrandSet g(2);
  auto v = ballot_from_voter(Relation::empty(g));
  auto w = ballot_from_voter(Relation::all_loops(g));

  auto single = replicate(make_family(g, {v}), 3);
  REQUIRE(single.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(single[i] == v);

  auto pair = replicate(make_family(g, {v, w}), 2);
  REQUIRE(pair.size() == 4);
  CHECK(pair[0] == v);
  CHECK(pair[1] == w);
  CHECK(pair[2] == v);
  CHECK(pair[3] == w);

  CHECK_THROWS_AS(replicate(single, 0), Error);
}

TEST_CASE("replicate preserves verification at every share") {
  std::mt19937_64 rng(41);
  GrandSet g(4);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Ballot> ballots;
    for (int i = 0; i < 3; ++i)
      ballots.push_back(ballot_from_voter(qc::test::random_relation(g, rng)));
    auto family = make_family(g, ballots);
    for (Share s : {Share(0, 1), Share(1, 3), Share(1, 2), Share(2, 3)}) {
      auto c = induced_choice(family, s);
      CHECK(verify(c, family, s).verified());
      for (std::uint64_t r : {2, 5})
        CHECK(verify(c, replicate(family, r), s).verified());
    }
  }
}

TEST_CASE("max_set stays inside the menu") {
  std::mt19937_64 rng(7);
  for (int n : {2, 3, 5}) {
    GrandSet g(n);
    for (int trial = 0; trial < 50; ++trial) {
      auto rel = qc::test::random_relation(g, rng);
      Menu menu = static_cast<Menu>(rng()) & g.full();
      CHECK(menu_subset(max_set(rel, menu), menu));
    }
  }
}

TEST_CASE("ballots satisfy both consistency axioms") {
  std::mt19937_64 rng(11);
  for (int n : {2, 3, 4, 5}) {
    GrandSet g(n);
    for (int trial = 0; trial < 50; ++trial) {
      auto b = ballot_from_voter(qc::test::random_relation(g, rng));
      CHECK(check_alpha(b.choice).is_ok());
      CHECK(check_gamma(b.choice).is_ok());
    }
  }
}

TEST_CASE("the revealed relation rationalizes every ballot") {
  std::mt19937_64 rng(13);
  for (int n : {2, 3, 4, 5}) {
    GrandSet g(n);
    for (int trial = 0; trial < 100; ++trial) {
      auto b = ballot_from_voter(qc::test::random_relation(g, rng));
      auto round = ballot_from_voter(revealed_relation(b.choice));
      CHECK(round.choice == b.choice);
    }
  }
}

TEST_CASE("adding arrows can only shrink max_set") {
  std::mt19937_64 rng(17);
  GrandSet g(4);
  for (int trial = 0; trial < 100; ++trial) {
    auto base = qc::test::random_relation(g, rng);
    auto rows = base.dominators;
    for (auto& row : rows) row |= static_cast<Menu>(rng()) & g.full();
    Relation denser(g, rows);
    for (Menu a = 0; a < g.menu_count(); ++a)
      CHECK(menu_subset(max_set(denser, a), max_set(base, a)));
  }
}

TEST_CASE("share arithmetic is exact on the boundary") {
  Share half(1, 2);
  CHECK(half.exceeded_by(2, 3));
  CHECK_FALSE(half.exceeded_by(1, 2));  // exactly one half: not strict
  CHECK_FALSE(half.exceeded_by(500'000, 1'000'000));
  CHECK(half.exceeded_by(500'001, 1'000'000));

  CHECK(Share(2, 4) == Share(1, 2));
  CHECK(Share(0, 7) == Share(0, 1));
  CHECK_THROWS_AS(Share(3, 3), ShareOutOfRange);
  CHECK_THROWS_AS(Share(1, 0), ShareOutOfRange);

  // share 0: any single endorsement wins, absence never does
  Share zero(0, 1);
  CHECK(zero.exceeded_by(1, 1'000'000));
  CHECK_FALSE(zero.exceeded_by(0, 3));
}

TEST_CASE("contractiveness is enforced on construction") {
  GrandSet g(2);
  std::vector<Menu> bad(4, 0);
  bad[1] = 2;  // chooses item 1 from menu {0}
  CHECK_THROWS_AS(QuasiChoice(g, bad), Error);
}

TEST_SUITE_END();
