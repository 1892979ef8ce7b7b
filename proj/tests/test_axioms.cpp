#include <doctest.h>

#include <random>

#include "support/helpers.hpp"

using namespace qc;
using qc::test::menu_of;

TEST_SUITE_BEGIN("axioms");

TEST_CASE("check_alpha on the named instances") {
  auto watson = fixture(FixtureId::watson).choice;
  CHECK(check_alpha(watson).is_ok());
  CHECK(qc::test::alpha_brute_force(watson));

  auto bad = fixture(FixtureId::nonliberal).choice;
  auto res = check_alpha(bad);
  REQUIRE_FALSE(res.is_ok());
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->axiom == AxiomWitness::Axiom::alpha);
  CHECK(res.witness->menu_a == menu_of({0, 2}));  // {x,z}
  CHECK(res.witness->menu_b == menu_of({0, 1, 2}));
  CHECK(res.witness->item == 2);  // z

  CHECK(check_alpha(identity_choice(GrandSet(4))).is_ok());
}

TEST_CASE("alpha witnesses contract by exactly one item") {
  std::mt19937_64 rng(3);
  GrandSet g(4);
  int violations = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Menu> table(g.menu_count());
    for (Menu a = 0; a < table.size(); ++a)
      table[a] = static_cast<Menu>(rng()) & a;
    QuasiChoice c(g, table);
    auto res = check_alpha(c);
    if (!res.is_ok()) {
      ++violations;
      const auto& w = *res.witness;
      CHECK(menu_subset(w.menu_a, w.menu_b));
      CHECK(menu_size(w.menu_b) == menu_size(w.menu_a) + 1);
      CHECK(menu_contains(w.menu_a, w.item));
      CHECK(c.chooses(w.menu_b, w.item));
      CHECK_FALSE(c.chooses(w.menu_a, w.item));
    }
  }
  CHECK(violations > 0);
}

TEST_CASE("single-contraction scan equals the full quantifier") {
  std::mt19937_64 rng(5);
  for (int n : {2, 3, 4}) {
    GrandSet g(n);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Menu> table(g.menu_count());
      for (Menu a = 0; a < table.size(); ++a)
        table[a] = static_cast<Menu>(rng()) & a;
      QuasiChoice c(g, table);
      CHECK(check_alpha(c).is_ok() == qc::test::alpha_brute_force(c));
    }
  }
}

TEST_CASE("check_gamma on the named instances") {
  // ballots always pass
  std::mt19937_64 rng(9);
  GrandSet g(4);
  for (int trial = 0; trial < 50; ++trial) {
    auto b = ballot_from_voter(qc::test::random_relation(g, rng));
    CHECK(check_gamma(b.choice).is_ok());
  }

  auto c = fixture(FixtureId::lib2_dem3).choice;
  auto res = check_gamma(c);
  REQUIRE_FALSE(res.is_ok());
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->axiom == AxiomWitness::Axiom::gamma);
  CHECK(res.witness->menu_a == menu_of({0, 1}));  // y in c({x,y})
  CHECK(res.witness->menu_b == menu_of({1, 2}));  // y in c({y,z})
  CHECK(res.witness->item == 1);                  // y dropped from the union

  CHECK(check_gamma(null_choice(GrandSet(3))).is_ok());
}

TEST_CASE("gamma scan equals the full quantifier") {
  std::mt19937_64 rng(15);
  for (int n : {2, 3, 4}) {
    GrandSet g(n);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Menu> table(g.menu_count());
      for (Menu a = 0; a < table.size(); ++a)
        table[a] = static_cast<Menu>(rng()) & a;
      QuasiChoice c(g, table);
      CHECK(check_gamma(c).is_ok() == qc::test::gamma_brute_force(c));
    }
  }
}

TEST_CASE("classify on the named instances") {
  GrandSet g2(2, {"x", "y"});
  std::vector<Menu> table = {0, 1, 2, 0};  // singletons chosen, pair empty
  auto cls = classify(QuasiChoice(g2, table));
  CHECK(cls.kind == RationalityClass::Kind::freely_rationalizable);
  REQUIRE(cls.rationalizer.has_value());
  CHECK(cls.rationalizer->arrow(0, 1));
  CHECK(cls.rationalizer->arrow(1, 0));

  auto id = classify(identity_choice(GrandSet(3)));
  CHECK(id.kind == RationalityClass::Kind::asymmetrically_rationalizable);
  CHECK(*id.rationalizer == Relation::empty(GrandSet(3)));

  auto bad = classify(fixture(FixtureId::lib2_dem3).choice);
  CHECK(bad.kind == RationalityClass::Kind::not_rationalizable);
  REQUIRE(bad.violation.has_value());
  CHECK(bad.violation->axiom == AxiomWitness::Axiom::gamma);
}

TEST_CASE("classification agrees with the two axioms") {
  std::mt19937_64 rng(21);
  GrandSet g(4);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Menu> table(g.menu_count());
    for (Menu a = 0; a < table.size(); ++a)
      table[a] = static_cast<Menu>(rng()) & a;
    QuasiChoice c(g, table);
    bool both = check_alpha(c).is_ok() && check_gamma(c).is_ok();
    CHECK(classify(c).rationalizable() == both);
  }
}

TEST_CASE("induced ballots always classify as rationalizable") {
  std::mt19937_64 rng(23);
  for (int n : {2, 3, 4, 5}) {
    GrandSet g(n);
    for (int trial = 0; trial < 250; ++trial) {
      auto b = ballot_from_voter(qc::test::random_relation(g, rng));
      CHECK(classify(b.choice).rationalizable());
    }
  }
}

TEST_CASE("decisive and rationalizable implies asymmetric") {
  std::mt19937_64 rng(25);
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 300; ++trial) {
      auto c = random_alpha(n, rng(), true);
      auto cls = classify(c);
      if (cls.rationalizable()) {
        REQUIRE(c.decisive());
        CHECK(cls.kind == RationalityClass::Kind::asymmetrically_rationalizable);
      }
    }
  }
}

TEST_CASE("gamma witness search guard above twelve items") {
  GrandSet g(13);
  CHECK(check_gamma(identity_choice(g)).is_ok());

  // a ballot on 13 items: rationalizable, so the fallback says ok
  std::mt19937_64 rng(27);
  auto b = ballot_from_voter(qc::test::random_relation(g, rng));
  CHECK(check_gamma(b.choice).is_ok());

  // alpha holds but gamma fails: verdict without witness
  std::vector<Menu> table(g.menu_count());
  for (Menu a = 0; a < table.size(); ++a) table[a] = a;
  table[g.full()] = 1;  // drop everything but item 0 from the grand menu
  QuasiChoice c(g, table);
  auto res = check_gamma(c);
  CHECK(res.status == CheckResult::Status::violated);
  CHECK_FALSE(res.witness.has_value());
}

TEST_SUITE_END();
