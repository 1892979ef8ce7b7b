#include "quasichoice/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>

#include "quasichoice/axioms.hpp"
#include "quasichoice/core.hpp"

namespace qc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Clock = std::chrono::steady_clock;

}  // namespace

std::vector<AcceptanceAntichain> acceptance_antichains(const QuasiChoice& c) {
  const int n = c.grand.n;
  const std::size_t count = c.grand.menu_count();

  // up[A] = items accepted at A or at any superset of A (superset-OR sweep)
  std::vector<Menu> up(c.table);
  for (int j = 0; j < n; ++j) {
    Menu bit = Menu{1} << j;
    for (std::size_t a = 0; a < count; ++a)
      if (!(a & bit)) up[a] |= up[a | bit];
  }

  std::vector<AcceptanceAntichain> chains(n);
  for (int p = 0; p < n; ++p) chains[p].item = p;
  for (std::size_t a = 0; a < count; ++a) {
    Menu strict_sup = 0;
    for (int j = 0; j < n; ++j)
      if (!(a & (Menu{1} << j))) strict_sup |= up[a | (Menu{1} << j)];
    Menu maximal = c.table[a] & ~strict_sup;
    while (maximal) {
      int p = lowest_item(maximal);
      maximal = menu_without(maximal, p);
      chains[p].maximal_menus.push_back(static_cast<Menu>(a));
    }
  }
  return chains;
}

LibNumber lib_number(const QuasiChoice& c) {
  if (!check_alpha(c).is_ok()) return {true, 0};
  auto chains = acceptance_antichains(c);
  u64 width = 1;
  for (const auto& chain : chains)
    width = std::max<u64>(width, chain.maximal_menus.size());
  return {false, width};
}

namespace {

// Ballots factor per item: item p is selected from A exactly when
// A subseteq C_p for the ballot's acceptance coordinate C_p (with p in C_p),
// or never when the coordinate is the "never" sentinel. A size-k democratic
// family therefore exists iff, independently for every item, some multiset
// of k coordinates meets the per-menu count constraints.
struct ItemSearch {
  std::vector<Menu> values;     // coordinate masks, ascending; no sentinel
  std::vector<Menu> yes_menus;  // maximal accepted menus: count >= threshold
  std::vector<Menu> no_menus;   // minimal rejected menus: count < threshold
};

struct SearchBudget {
  u64 nodes = 0;
  u64 node_cap;
  Clock::time_point deadline;
  bool has_deadline;
  bool exhausted = false;

  bool tick() {
    if (exhausted) return false;
    if (++nodes > node_cap ||
        (has_deadline && (nodes & 0xfff) == 0 && Clock::now() > deadline)) {
      exhausted = true;
      return false;
    }
    return true;
  }
};

ItemSearch make_item_search(const QuasiChoice& c, int item,
                            const std::vector<AcceptanceAntichain>& chains) {
  ItemSearch s;
  const int n = c.grand.n;
  const Menu full = c.grand.full();
  Menu self = Menu{1} << item;
  for (Menu rest = full & ~self;; ) {
    s.values.push_back(rest | self);
    if (rest == 0) break;
    rest = (rest - 1) & (full & ~self);
  }
  std::sort(s.values.begin(), s.values.end());

  s.yes_menus = chains[item].maximal_menus;
  // minimal rejected menus containing the item: rejected with every
  // one-item-smaller menu containing the item accepted
  for (Menu a = 0; a < c.grand.menu_count(); ++a) {
    if (!menu_contains(a, item) || c.chooses(a, item)) continue;
    bool minimal = true;
    for (int j = 0; j < n && minimal; ++j) {
      if (!menu_contains(a, j) || j == item) continue;
      if (!c.chooses(menu_without(a, j), item)) minimal = false;
    }
    if (!minimal) continue;
    s.no_menus.push_back(a);
  }
  return s;
}

// DFS over non-decreasing value indices (sentinel slots are the slack left
// at the end). Returns the lexicographically least multiset of coordinates,
// sentinel slots omitted.
bool solve_item(const ItemSearch& s, u64 k, u64 threshold, SearchBudget& budget,
                std::vector<Menu>& out) {
  const std::size_t v = s.values.size();
  std::vector<u64> yes_count(s.yes_menus.size(), 0);
  std::vector<u64> no_count(s.no_menus.size(), 0);
  // last value index covering each yes menu (values are sorted, and any
  // covering value is a superset, hence numerically >= the menu)
  std::vector<std::size_t> last_cover(s.yes_menus.size(), 0);
  for (std::size_t i = 0; i < s.yes_menus.size(); ++i) {
    bool found = false;
    for (std::size_t j = v; j-- > 0;)
      if (menu_subset(s.yes_menus[i], s.values[j])) {
        last_cover[i] = j;
        found = true;
        break;
      }
    if (!found) return false;  // unreachable: the menu itself is a value
  }

  std::vector<Menu> picks;
  picks.reserve(k);

  std::function<bool(u64, std::size_t)> dfs = [&](u64 slots,
                                                  std::size_t min_idx) -> bool {
    if (!budget.tick()) return false;
    bool satisfied = true;
    for (std::size_t i = 0; i < yes_count.size(); ++i) {
      if (yes_count[i] >= threshold) continue;
      satisfied = false;
      if (yes_count[i] + slots < threshold) return false;
      if (min_idx > last_cover[i]) return false;  // no covering value left
    }
    if (satisfied) {
      out = picks;
      return true;  // remaining slots stay sentinel
    }
    if (slots == 0) return false;
    for (std::size_t idx = min_idx; idx < v; ++idx) {
      Menu value = s.values[idx];
      bool blocked = false;
      for (std::size_t i = 0; i < no_count.size() && !blocked; ++i)
        if (menu_subset(s.no_menus[i], value) &&
            no_count[i] + 1 >= threshold)
          blocked = true;
      if (blocked) continue;
      for (std::size_t i = 0; i < yes_count.size(); ++i)
        if (menu_subset(s.yes_menus[i], value)) ++yes_count[i];
      for (std::size_t i = 0; i < no_count.size(); ++i)
        if (menu_subset(s.no_menus[i], value)) ++no_count[i];
      picks.push_back(value);
      if (dfs(slots - 1, idx)) return true;
      picks.pop_back();
      for (std::size_t i = 0; i < yes_count.size(); ++i)
        if (menu_subset(s.yes_menus[i], value)) --yes_count[i];
      for (std::size_t i = 0; i < no_count.size(); ++i)
        if (menu_subset(s.no_menus[i], value)) --no_count[i];
      if (budget.exhausted) return false;
    }
    return false;
  };
  return dfs(k, 0);
}

BallotFamily family_from_coordinates(
    const QuasiChoice& c, u64 k, const std::vector<std::vector<Menu>>& coords) {
  const int n = c.grand.n;
  const Menu full = c.grand.full();
  std::vector<Ballot> ballots;
  ballots.reserve(k);
  for (u64 slot = 0; slot < k; ++slot) {
    std::vector<Menu> rows(n);
    for (int p = 0; p < n; ++p) {
      if (slot < coords[p].size())
        rows[p] = full & ~coords[p][slot];
      else
        rows[p] = Menu{1} << p;  // sentinel slot: never selected
    }
    ballots.push_back(ballot_from_voter(Relation(c.grand, std::move(rows))));
  }
  std::sort(ballots.begin(), ballots.end(),
            [](const Ballot& a, const Ballot& b) {
              return a.choice.table < b.choice.table;
            });
  return make_family(c.grand, std::move(ballots));
}

}  // namespace

DemResult dem_number(const QuasiChoice& c, const DemLimits& limits) {
  if (!check_alpha(c).is_ok()) return {DemResult::Kind::infinite, 0, 0, 0, 0, {}};
  if (c.grand.n > limits.max_items)
    throw GrandSetTooLarge(c.grand.n, limits.max_items);

  auto chains = acceptance_antichains(c);
  u64 lib = 1;
  for (const auto& chain : chains)
    lib = std::max<u64>(lib, chain.maximal_menus.size());
  const u64 hi = 2 * lib;

  std::vector<ItemSearch> searches;
  searches.reserve(c.grand.n);
  for (int p = 0; p < c.grand.n; ++p)
    searches.push_back(make_item_search(c, p, chains));

  SearchBudget budget{0, limits.node_cap, Clock::now() + limits.timeout,
                      limits.timeout.count() > 0, false};

  for (u64 k = 1; k <= hi; ++k) {
    const u64 threshold = k / 2 + 1;  // count > k/2
    std::vector<std::vector<Menu>> coords(c.grand.n);
    bool all = true;
    for (int p = 0; p < c.grand.n && all; ++p)
      all = solve_item(searches[p], k, threshold, budget, coords[p]);
    if (budget.exhausted)
      return {DemResult::Kind::interval, 0, k, hi, budget.nodes, {}};
    if (!all) continue;
    auto family = family_from_coordinates(c, k, coords);
    return {DemResult::Kind::exact, k, 0, 0, budget.nodes, std::move(family)};
  }
  // k = 2*lib is always feasible (double a liberal representation), so the
  // loop only falls through when the window itself was empty.
  return {DemResult::Kind::interval, 0, 1, hi, budget.nodes, {}};
}

namespace {

// Every voter relation over n <= 3 items, deduplicated by induced table.
std::vector<std::vector<Menu>> enumerate_ballot_tables(const GrandSet& grand) {
  const int n = grand.n;
  const std::size_t relations = std::size_t{1} << (n * n);
  std::vector<std::vector<Menu>> tables;
  tables.reserve(relations);
  for (std::size_t id = 0; id < relations; ++id) {
    std::vector<Menu> rows(n);
    for (int p = 0; p < n; ++p)
      rows[p] = static_cast<Menu>((id >> (p * n)) & ((std::size_t{1} << n) - 1));
    tables.push_back(
        ballot_from_voter(Relation(grand, std::move(rows))).choice.table);
  }
  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  return tables;
}

}  // namespace

std::optional<u64> oracle_lib(const QuasiChoice& c, u64 kmax) {
  if (c.grand.n > kOracleMaxItems)
    throw GrandSetTooLarge(c.grand.n, kOracleMaxItems);
  const std::size_t menus = c.grand.menu_count();

  auto all_tables = enumerate_ballot_tables(c.grand);
  std::vector<std::vector<Menu>> under;  // ballots pointwise <= c
  for (auto& t : all_tables) {
    bool ok = true;
    for (std::size_t a = 0; a < menus && ok; ++a)
      ok = menu_subset(t[a], c.table[a]);
    if (ok) under.push_back(std::move(t));
  }
  if (under.empty()) return std::nullopt;

  // suffix_cover[i] = pointwise union of candidates i..end
  std::vector<std::vector<Menu>> suffix(under.size() + 1,
                                        std::vector<Menu>(menus, 0));
  for (std::size_t i = under.size(); i-- > 0;)
    for (std::size_t a = 0; a < menus; ++a)
      suffix[i][a] = suffix[i + 1][a] | under[i][a];

  std::vector<Menu> current(menus, 0);
  std::function<bool(u64, std::size_t)> dfs = [&](u64 slots,
                                                  std::size_t idx) -> bool {
    bool covered = true;
    for (std::size_t a = 0; a < menus; ++a) {
      if ((current[a] | suffix[idx][a]) != c.table[a]) return false;
      if (current[a] != c.table[a]) covered = false;
    }
    if (covered) return true;
    if (slots == 0) return false;
    for (std::size_t i = idx; i < under.size(); ++i) {
      std::vector<Menu> saved = current;
      for (std::size_t a = 0; a < menus; ++a) current[a] |= under[i][a];
      if (dfs(slots - 1, i + 1)) return true;
      current = std::move(saved);
    }
    return false;
  };

  for (u64 k = 1; k <= kmax; ++k) {
    std::fill(current.begin(), current.end(), 0);
    if (dfs(k, 0)) return k;
  }
  return std::nullopt;
}

std::optional<u64> oracle_dem(const QuasiChoice& c, u64 kmax) {
  if (c.grand.n > kOracleMaxItems)
    throw GrandSetTooLarge(c.grand.n, kOracleMaxItems);
  const std::size_t menus = c.grand.menu_count();
  const int n = c.grand.n;

  auto universe = enumerate_ballot_tables(c.grand);
  std::vector<std::vector<u64>> count(menus, std::vector<u64>(n, 0));

  for (u64 k = 1; k <= kmax; ++k) {
    const u64 threshold = k / 2 + 1;

    std::function<bool(u64, std::size_t)> dfs = [&](u64 slots,
                                                    std::size_t idx) -> bool {
      // prune on both sides of the biconditional
      for (std::size_t a = 1; a < menus; ++a) {
        for (int p = 0; p < n; ++p) {
          if (!menu_contains(static_cast<Menu>(a), p)) continue;
          if (c.chooses(static_cast<Menu>(a), p)) {
            if (count[a][p] + slots < threshold) return false;
          } else {
            if (count[a][p] >= threshold) return false;
          }
        }
      }
      if (slots == 0) {
        for (std::size_t a = 1; a < menus; ++a)
          for (int p = 0; p < n; ++p)
            if (c.chooses(static_cast<Menu>(a), p) &&
                count[a][p] < threshold)
              return false;
        return true;
      }
      for (std::size_t i = idx; i < universe.size(); ++i) {
        for (std::size_t a = 1; a < menus; ++a) {
          Menu sel = universe[i][a];
          while (sel) {
            int p = lowest_item(sel);
            sel = menu_without(sel, p);
            ++count[a][p];
          }
        }
        if (dfs(slots - 1, i)) return true;
        for (std::size_t a = 1; a < menus; ++a) {
          Menu sel = universe[i][a];
          while (sel) {
            int p = lowest_item(sel);
            sel = menu_without(sel, p);
            --count[a][p];
          }
        }
      }
      return false;
    };

    if (dfs(k, 0)) return k;
  }
  return std::nullopt;
}

u64 binomial(unsigned n, unsigned k) {
  if (n > 64) throw Error("binomial limited to n <= 64");
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // exact at every step
  }
  return static_cast<u64>(result);
}

u64 sperner_bound(int n) {
  assert(n >= 2);
  return binomial(static_cast<unsigned>(n - 1),
                  static_cast<unsigned>((n - 1) / 2));
}

long double sperner_ratio(int n) {
  assert(n >= 2 && n <= 64);
  long double bound = static_cast<long double>(sperner_bound(n));
  return bound * std::sqrt(static_cast<long double>(n)) /
         std::exp2(static_cast<long double>(n));
}

BoundsReport bounds_report(const QuasiChoice& c, const DemLimits& limits) {
  BoundsReport report;
  report.n = c.grand.n;
  report.lib = lib_number(c);
  report.sperner = sperner_bound(c.grand.n);
  report.ratio = sperner_ratio(std::min(c.grand.n, 64));

  if (report.lib.is_infinite) {
    report.dem = {DemResult::Kind::infinite, 0, 0, 0, 0, {}};
    return report;
  }
  report.lib_within_sperner = report.lib.value <= report.sperner;

  if (c.grand.n <= limits.max_items) {
    report.dem = dem_number(c, limits);
  } else {
    report.dem_from_relative_bounds = true;
    if (report.lib.value == 1) {
      // rationalizable, so a single ballot works at every share
      report.dem = {DemResult::Kind::exact, 1, 0, 0, 0,
                    make_family(c.grand,
                                {ballot_from_voter(revealed_relation(c))})};
    } else {
      u64 lo = 2;
      while ((u64{1} << (lo - 1)) < report.lib.value) ++lo;  // lib <= 2^(dem-1)
      report.dem = {DemResult::Kind::interval, 0, lo, 2 * report.lib.value, 0, {}};
    }
  }

  if (report.dem.kind == DemResult::Kind::exact) {
    u64 dem = report.dem.value;
    report.dem_le_two_lib = dem <= 2 * report.lib.value;
    report.lib_le_pow2_dem =
        dem - 1 >= 64 || report.lib.value <= (u64{1} << (dem - 1));
  }
  return report;
}

}  // namespace qc
