#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quasichoice/errors.hpp"

namespace qc {

/// A menu is a subset of the grand set, encoded as a bitmask: bit i is set
/// iff item i belongs to the menu.
using Menu = std::uint32_t;

inline constexpr int kDefaultMaxItems = 16;
inline constexpr int kAbsoluteMaxItems = 24;

constexpr bool menu_contains(Menu m, int item) { return (m >> item) & 1u; }
constexpr Menu menu_with(Menu m, int item) { return m | (Menu{1} << item); }
constexpr Menu menu_without(Menu m, int item) { return m & ~(Menu{1} << item); }
constexpr int menu_size(Menu m) { return std::popcount(m); }
constexpr bool menu_subset(Menu a, Menu b) { return (a & ~b) == 0; }
constexpr int lowest_item(Menu m) { return std::countr_zero(m); }

/// The finite set of alternatives. Items are indices 0..n-1; labels are
/// optional presentation names (distinct, non-empty when present).
struct GrandSet {
  explicit GrandSet(int n, std::vector<std::string> labels = {},
                    int max_items = kDefaultMaxItems);

  int n;
  std::vector<std::string> labels;  // empty vector = unlabeled

  Menu full() const { return (Menu{1} << n) - 1; }
  std::size_t menu_count() const { return std::size_t{1} << n; }
  bool labeled() const { return !labels.empty(); }

  std::string item_name(int item) const;
  std::optional<int> item_by_name(const std::string& name) const;
  std::string menu_name(Menu m) const;  // "{x,z}"
};

/// Two grand sets describe the same universe when they have the same number
/// of items and, if both are labeled, the same labels in the same order.
bool same_universe(const GrandSet& a, const GrandSet& b);

/// Exact rational share s with 0 <= s < 1, kept reduced.
struct Share {
  Share() = default;
  Share(std::uint64_t num, std::uint64_t den);

  std::uint64_t num = 0;
  std::uint64_t den = 1;

  bool is_zero() const { return num == 0; }
  /// The strict endorsement test of the majority rule:
  /// count / family_size > num / den, evaluated as integer cross products.
  bool exceeded_by(std::uint64_t count, std::uint64_t family_size) const;

  friend bool operator==(const Share& a, const Share& b) = default;
  std::string str() const;
};

/// A quasi-choice: one selected subset per menu, with c(A) subseteq A.
/// The full table over all 2^n menus is materialized.
struct QuasiChoice {
  QuasiChoice(GrandSet grand, std::vector<Menu> table);

  GrandSet grand;
  std::vector<Menu> table;  // indexed by menu; table[0] == 0

  Menu operator()(Menu menu) const { return table[menu]; }
  bool chooses(Menu menu, int item) const {
    return menu_contains(table[menu], item);
  }
  /// Nonempty selection from every nonempty menu.
  bool decisive() const;
};

/// Equality of behavior: same item count and same table. Labels are
/// presentation only and do not participate.
bool operator==(const QuasiChoice& a, const QuasiChoice& b);

/// A voter: an arbitrary dominance relation, stored by dominated item.
/// dominators[p] = {q : q -> p}. Loops (p -> p) and mutual arrows are legal.
struct Relation {
  Relation(GrandSet grand, std::vector<Menu> dominators);

  GrandSet grand;
  std::vector<Menu> dominators;

  static Relation empty(GrandSet grand);
  static Relation all_loops(GrandSet grand);

  bool arrow(int from, int to) const {
    return menu_contains(dominators[to], from);
  }
  /// All arrows as (from, to) pairs, sorted.
  std::vector<std::pair<int, int>> edges() const;
};

bool operator==(const Relation& a, const Relation& b);

/// A ballot: the quasi-choice induced by a voter via non-dominated selection,
/// together with one rationalizing voter. Build with ballot_from_voter.
struct Ballot {
  QuasiChoice choice;
  Relation witness;
};

/// Ballots compare by their choice table; the witness voter is not unique
/// and does not participate in equality.
bool operator==(const Ballot& a, const Ballot& b);

/// An ordered multiset of ballots over a common grand set, k >= 1.
/// Members are shared immutable ballots so that heavily replicated families
/// stay cheap.
struct BallotFamily {
  BallotFamily(GrandSet grand,
               std::vector<std::shared_ptr<const Ballot>> members);

  GrandSet grand;
  std::vector<std::shared_ptr<const Ballot>> members;

  std::size_t size() const { return members.size(); }
  const Ballot& operator[](std::size_t i) const { return *members[i]; }
};

BallotFamily make_family(GrandSet grand, std::vector<Ballot> ballots);

}  // namespace qc
