#include "quasichoice/generators.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "quasichoice/core.hpp"

namespace qc {

namespace {

QuasiChoice table_from_rule(GrandSet grand,
                            const std::function<Menu(Menu)>& rule) {
  std::vector<Menu> table(grand.menu_count());
  for (Menu a = 0; a < table.size(); ++a) table[a] = rule(a);
  return QuasiChoice(std::move(grand), std::move(table));
}

Relation relation_from_arrows(
    const GrandSet& grand,
    const std::vector<std::pair<int, int>>& arrows) {
  std::vector<Menu> rows(grand.n, 0);
  for (auto [from, to] : arrows) rows[to] = menu_with(rows[to], from);
  return Relation(grand, std::move(rows));
}

GrandSet xyz() { return GrandSet(3, {"x", "y", "z"}); }
GrandSet xyzw() { return GrandSet(4, {"x", "y", "z", "w"}); }

constexpr Menu X = 1, Y = 2, Z = 4, W = 8;

}  // namespace

std::string_view fixture_name(FixtureId id) {
  switch (id) {
    case FixtureId::watson: return "watson";
    case FixtureId::nonliberal: return "nonliberal";
    case FixtureId::lib2_dem3: return "ex-lib2-dem3";
    case FixtureId::dem5_lib10: return "ex-dem5-lib10";
    case FixtureId::dem_eq_lib: return "ex-dem-eq-lib";
  }
  return "";
}

std::optional<FixtureId> fixture_from_name(std::string_view name) {
  for (FixtureId id : all_fixtures())
    if (fixture_name(id) == name) return id;
  return std::nullopt;
}

std::vector<FixtureId> all_fixtures() {
  return {FixtureId::watson, FixtureId::nonliberal, FixtureId::lib2_dem3,
          FixtureId::dem5_lib10, FixtureId::dem_eq_lib};
}

Fixture fixture(FixtureId id) {
  switch (id) {
    case FixtureId::watson: {
      GrandSet g = xyz();
      auto choice = table_from_rule(g, [](Menu a) -> Menu {
        if (a == (Y | Z)) return Y;
        if (a == (X | Y | Z)) return X | Y;
        return a;
      });
      // the two rankings behind the story: y > z > x and x > y > z
      std::vector<Ballot> rationales;
      rationales.push_back(ballot_from_voter(
          relation_from_arrows(g, {{1, 2}, {1, 0}, {2, 0}})));
      rationales.push_back(ballot_from_voter(
          relation_from_arrows(g, {{0, 1}, {0, 2}, {1, 2}})));
      return {std::move(choice), make_family(g, std::move(rationales)),
              std::nullopt};
    }
    case FixtureId::nonliberal: {
      GrandSet g = xyz();
      auto choice = table_from_rule(g, [](Menu a) -> Menu {
        return a == (X | Z) ? X : a;
      });
      return {std::move(choice), std::nullopt, std::nullopt};
    }
    case FixtureId::lib2_dem3: {
      GrandSet g = xyz();
      auto choice = table_from_rule(g, [](Menu a) -> Menu {
        if (a == (X | Z)) return X;
        if (a == (Y | Z)) return Y;
        if (a == (X | Y | Z)) return X;
        return a;
      });
      // voter 1: the linear order x > y > z; voter 2: x -> z with y, z
      // pairwise exclusive; voter 3: empty (neutral)
      Ballot v1 = ballot_from_voter(
          relation_from_arrows(g, {{0, 1}, {0, 2}, {1, 2}}));
      Ballot v2 = ballot_from_voter(
          relation_from_arrows(g, {{0, 2}, {1, 2}, {2, 1}}));
      Ballot v3 = neutral_ballot(g);
      auto liberal = make_family(g, {v1, v2});
      auto democratic = make_family(g, {v1, v2, v3});
      return {std::move(choice), std::move(liberal), std::move(democratic)};
    }
    case FixtureId::dem5_lib10: {
      auto choice = gen_cnk(5, 3);
      const GrandSet& g = choice.grand;
      std::vector<Ballot> voters;
      for (int i = 1; i <= 5; ++i)
        voters.push_back(ballot_from_voter(relation_from_arrows(g, {{i, 0}})));
      return {choice, std::nullopt, make_family(g, std::move(voters))};
    }
    case FixtureId::dem_eq_lib: {
      GrandSet g = xyzw();
      auto choice = table_from_rule(g, [](Menu a) -> Menu {
        switch (a) {
          case X | W: return X;
          case Y | W: return Y;
          case X | Y | Z: return X | Y;
          case X | Y | W: return X | Y;
          case X | Z | W: return X;
          case Y | Z | W: return Y;
          case X | Y | Z | W: return X;
          default: return a;
        }
      });
      // the stated democratic triple
      Ballot d1 = ballot_from_voter(
          relation_from_arrows(g, {{0, 1}, {0, 2}, {0, 3}, {1, 3}}));
      Ballot d2 = ballot_from_voter(
          relation_from_arrows(g, {{0, 3}, {1, 2}, {1, 3}}));
      Ballot d3 = ballot_from_voter(relation_from_arrows(g, {{3, 1}, {3, 2}}));
      // the stated liberal triple: a linear order, a voter with a strict
      // cycle, and a non-asymmetric voter
      Ballot l1 = ballot_from_voter(relation_from_arrows(
          g, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
      Ballot l2 = ballot_from_voter(
          relation_from_arrows(g, {{0, 2}, {0, 3}, {1, 3}, {3, 2}, {2, 1}}));
      Ballot l3 = ballot_from_voter(
          relation_from_arrows(g, {{0, 3}, {3, 2}, {1, 2}, {1, 3}, {3, 1}}));
      return {std::move(choice), make_family(g, {l1, l2, l3}),
              make_family(g, {d1, d2, d3})};
    }
  }
  throw Error("unknown fixture");
}

namespace {

void validate_cnk(int n, int k) {
  if (n < 1) throw Error("gen_cnk needs n >= 1");
  if (k < 1 || k > n + 1)
    throw Error("gen_cnk needs 1 <= k <= n+1");
}

GrandSet cnk_grand(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
  return GrandSet(n + 1, std::move(labels));
}

}  // namespace

QuasiChoice gen_cnk(int n, int k) {
  validate_cnk(n, k);
  return table_from_rule(cnk_grand(n), [k](Menu a) -> Menu {
    if (menu_contains(a, 0) && menu_size(a) > k) return menu_without(a, 0);
    return a;
  });
}

BallotFamily gen_cnk_liberal_family(int n, int k) {
  validate_cnk(n, k);
  GrandSet g = cnk_grand(n);
  const Menu full = g.full();
  std::vector<Ballot> ballots;
  for (Menu a = 0; a <= full; ++a) {
    if (!menu_contains(a, 0) || menu_size(a) != k) continue;
    // v_A keeps 0 only inside A: dominators of 0 are the items outside A
    std::vector<Menu> rows(g.n, 0);
    rows[0] = full & ~a;
    ballots.push_back(ballot_from_voter(Relation(g, std::move(rows))));
  }
  return make_family(g, std::move(ballots));
}

BallotFamily gen_cnk_democratic_family(int n, int k) {
  validate_cnk(n, k);
  GrandSet g = cnk_grand(n);
  std::vector<Ballot> ballots;
  for (int i = 1; i <= n; ++i) {
    std::vector<Menu> rows(g.n, 0);
    rows[0] = Menu{1} << i;  // the single arrow i -> 0
    ballots.push_back(ballot_from_voter(Relation(g, std::move(rows))));
  }
  if (2 * k > n) {
    for (int i = 0; i < 2 * k - n - 1; ++i) ballots.push_back(neutral_ballot(g));
  } else {
    for (int i = 0; i < n - 2 * k; ++i)
      ballots.push_back(hypercritical_ballot(g));
  }
  return make_family(g, std::move(ballots));
}

namespace {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;  // bias is irrelevant here; determinism is not
}

}  // namespace

QuasiChoice random_alpha(int n, std::uint64_t seed, bool decisive) {
  GrandSet g(n);
  std::mt19937_64 rng(seed);

  std::vector<Ballot> ballots;
  std::uint64_t voters = 1 + draw_below(rng, 5);
  for (std::uint64_t v = 0; v < voters; ++v) {
    std::vector<Menu> rows(n);
    for (int p = 0; p < n; ++p)
      rows[p] = static_cast<Menu>(rng()) & g.full();
    ballots.push_back(ballot_from_voter(Relation(g, std::move(rows))));
  }
  if (decisive) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(order[i],
                order[draw_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    std::vector<Menu> rows(n, 0);
    for (int hi = 0; hi < n; ++hi)
      for (int lo = hi + 1; lo < n; ++lo)
        rows[order[lo]] = menu_with(rows[order[lo]], order[hi]);
    ballots.push_back(ballot_from_voter(Relation(g, std::move(rows))));
  }

  std::vector<Menu> table(g.menu_count(), 0);
  for (const Ballot& b : ballots)
    for (Menu a = 0; a < table.size(); ++a) table[a] |= b.choice.table[a];
  return QuasiChoice(std::move(g), std::move(table));
}

}  // namespace qc
