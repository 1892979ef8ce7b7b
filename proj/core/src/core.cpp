#include "quasichoice/core.hpp"

#include <cassert>

namespace qc {

Menu max_set(const Relation& rel, Menu menu) {
  assert(menu_subset(menu, rel.grand.full()));
  Menu out = 0;
  for (Menu rest = menu; rest;) {
    int p = lowest_item(rest);
    rest = menu_without(rest, p);
    if ((rel.dominators[p] & menu) == 0) out = menu_with(out, p);
  }
  return out;
}

Ballot ballot_from_voter(Relation rel) {
  std::vector<Menu> table(rel.grand.menu_count());
  for (Menu a = 0; a < table.size(); ++a) table[a] = max_set(rel, a);
  QuasiChoice choice(rel.grand, std::move(table));
  return Ballot{std::move(choice), std::move(rel)};
}

Relation revealed_relation(const QuasiChoice& c) {
  const int n = c.grand.n;
  std::vector<Menu> rows(n, 0);
  for (int p = 0; p < n; ++p) {
    Menu self = Menu{1} << p;
    if (!c.chooses(self, p)) {
      rows[p] = self;  // repellent: loop absorbs all other arrows
      continue;
    }
    for (int x = 0; x < n; ++x) {
      if (x == p) continue;
      if (!c.chooses(self | (Menu{1} << x), p)) rows[p] = menu_with(rows[p], x);
    }
  }
  return Relation(c.grand, std::move(rows));
}

BallotFamily replicate(const BallotFamily& family, std::uint64_t times) {
  if (times == 0) throw Error("replication factor must be positive");
  std::vector<std::shared_ptr<const Ballot>> members;
  members.reserve(family.size() * times);
  for (std::uint64_t r = 0; r < times; ++r)
    for (const auto& b : family.members) members.push_back(b);
  return BallotFamily(family.grand, std::move(members));
}

QuasiChoice identity_choice(GrandSet grand) {
  std::vector<Menu> table(grand.menu_count());
  for (Menu a = 0; a < table.size(); ++a) table[a] = a;
  return QuasiChoice(std::move(grand), std::move(table));
}

QuasiChoice null_choice(GrandSet grand) {
  std::vector<Menu> table(grand.menu_count(), 0);
  return QuasiChoice(std::move(grand), std::move(table));
}

Ballot neutral_ballot(const GrandSet& grand) {
  return ballot_from_voter(Relation::empty(grand));
}

Ballot hypercritical_ballot(const GrandSet& grand) {
  return ballot_from_voter(Relation::all_loops(grand));
}

}  // namespace qc
