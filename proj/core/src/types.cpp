#include "quasichoice/types.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace qc {

GrandSet::GrandSet(int n, std::vector<std::string> labels, int max_items)
    : n(n), labels(std::move(labels)) {
  int cap = std::min(max_items, kAbsoluteMaxItems);
  if (n > cap) throw GrandSetTooLarge(n, cap);
  if (n < 2) throw Error("grand set needs at least 2 items");
  if (!this->labels.empty()) {
    if (static_cast<int>(this->labels.size()) != n)
      throw Error("expected " + std::to_string(n) + " item labels, got " +
                  std::to_string(this->labels.size()));
    std::unordered_set<std::string> seen;
    for (const auto& l : this->labels) {
      if (l.empty()) throw Error("empty item label");
      if (!seen.insert(l).second) throw Error("duplicate item label '" + l + "'");
    }
  }
}

std::string GrandSet::item_name(int item) const {
  if (labeled()) return labels[item];
  return std::to_string(item);
}

std::optional<int> GrandSet::item_by_name(const std::string& name) const {
  if (labeled()) {
    for (int i = 0; i < n; ++i)
      if (labels[i] == name) return i;
    return std::nullopt;
  }
  if (name.empty() || name.size() > 2) return std::nullopt;
  for (char ch : name)
    if (ch < '0' || ch > '9') return std::nullopt;
  int v = std::stoi(name);
  if (v >= n) return std::nullopt;
  return v;
}

std::string GrandSet::menu_name(Menu m) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (!menu_contains(m, i)) continue;
    if (!first) out += ",";
    out += item_name(i);
    first = false;
  }
  out += "}";
  return out;
}

bool same_universe(const GrandSet& a, const GrandSet& b) {
  if (a.n != b.n) return false;
  if (a.labeled() && b.labeled()) return a.labels == b.labels;
  return true;
}

Share::Share(std::uint64_t num, std::uint64_t den) : num(num), den(den) {
  if (den == 0) throw ShareOutOfRange("share denominator is zero");
  if (num >= den)
    throw ShareOutOfRange("share " + std::to_string(num) + "/" +
                          std::to_string(den) + " is not below 1");
  auto g = std::gcd(this->num, this->den);
  this->num /= g;
  this->den /= g;
}

bool Share::exceeded_by(std::uint64_t count, std::uint64_t family_size) const {
  using u128 = unsigned __int128;
  return u128(count) * den > u128(num) * family_size;
}

std::string Share::str() const {
  if (num == 0) return "0";
  return std::to_string(num) + "/" + std::to_string(den);
}

QuasiChoice::QuasiChoice(GrandSet g, std::vector<Menu> t)
    : grand(std::move(g)), table(std::move(t)) {
  if (table.size() != grand.menu_count())
    throw Error("choice table has " + std::to_string(table.size()) +
                " entries, expected " + std::to_string(grand.menu_count()));
  for (Menu a = 0; a < table.size(); ++a)
    if (!menu_subset(table[a], a))
      throw Error("choice from menu " + grand.menu_name(a) +
                  " is not contained in it");
}

bool QuasiChoice::decisive() const {
  for (Menu a = 1; a < table.size(); ++a)
    if (table[a] == 0) return false;
  return true;
}

bool operator==(const QuasiChoice& a, const QuasiChoice& b) {
  return a.grand.n == b.grand.n && a.table == b.table;
}

Relation::Relation(GrandSet g, std::vector<Menu> rows)
    : grand(std::move(g)), dominators(std::move(rows)) {
  if (dominators.size() != static_cast<std::size_t>(grand.n))
    throw Error("relation needs one dominator row per item");
  for (Menu row : dominators)
    if (!menu_subset(row, grand.full()))
      throw Error("dominator row mentions items outside the grand set");
}

Relation Relation::empty(GrandSet grand) {
  std::vector<Menu> rows(grand.n, 0);
  return Relation(std::move(grand), std::move(rows));
}

Relation Relation::all_loops(GrandSet grand) {
  std::vector<Menu> rows(grand.n);
  for (int p = 0; p < grand.n; ++p) rows[p] = Menu{1} << p;
  return Relation(std::move(grand), std::move(rows));
}

std::vector<std::pair<int, int>> Relation::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int to = 0; to < grand.n; ++to)
    for (int from = 0; from < grand.n; ++from)
      if (menu_contains(dominators[to], from)) out.emplace_back(from, to);
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Relation& a, const Relation& b) {
  return a.grand.n == b.grand.n && a.dominators == b.dominators;
}

bool operator==(const Ballot& a, const Ballot& b) {
  return a.choice == b.choice;
}

BallotFamily::BallotFamily(GrandSet g,
                           std::vector<std::shared_ptr<const Ballot>> m)
    : grand(std::move(g)), members(std::move(m)) {
  if (members.empty()) throw Error("ballot family needs at least one member");
  for (const auto& b : members) {
    if (!b) throw Error("null ballot in family");
    if (!same_universe(b->choice.grand, grand))
      throw Error("family member lives on a different grand set");
  }
}

BallotFamily make_family(GrandSet grand, std::vector<Ballot> ballots) {
  std::vector<std::shared_ptr<const Ballot>> members;
  members.reserve(ballots.size());
  for (auto& b : ballots)
    members.push_back(std::make_shared<const Ballot>(std::move(b)));
  return BallotFamily(std::move(grand), std::move(members));
}

}  // namespace qc
