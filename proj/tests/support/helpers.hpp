#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "quasichoice/quasichoice.hpp"

namespace qc::test {

// Full-quantifier contraction check (all A subseteq B, not just single-item
// contractions). Independent oracle for check_alpha; only for small n.
inline bool alpha_brute_force(const QuasiChoice& c) {
  const Menu count = static_cast<Menu>(c.grand.menu_count());
  for (Menu b = 0; b < count; ++b) {
    for (Menu a = b;; a = (a - 1) & b) {  // all subsets of b
      if ((a & c.table[b] & ~c.table[a]) != 0) return false;
      if (a == 0) break;
    }
  }
  return true;
}

inline bool gamma_brute_force(const QuasiChoice& c) {
  const Menu count = static_cast<Menu>(c.grand.menu_count());
  for (Menu a = 0; a < count; ++a)
    for (Menu b = 0; b < count; ++b)
      if ((c.table[a] & c.table[b] & ~c.table[a | b]) != 0) return false;
  return true;
}

inline Relation random_relation(const GrandSet& g, std::mt19937_64& rng) {
  std::vector<Menu> rows(g.n);
  for (int p = 0; p < g.n; ++p)
    rows[p] = static_cast<Menu>(rng()) & g.full();
  return Relation(g, rows);
}

// Every quasi-choice over n items (table entries enumerated directly).
// 2^(n * 2^(n-1)) tables, so n <= 2 in practice.
inline std::vector<QuasiChoice> all_quasi_choices(int n) {
  GrandSet g(n);
  const Menu menus = static_cast<Menu>(g.menu_count());
  std::vector<QuasiChoice> out;
  std::vector<Menu> table(menus, 0);
  std::function<void(Menu)> fill = [&](Menu a) {
    if (a == menus) {
      out.push_back(QuasiChoice(g, table));
      return;
    }
    for (Menu choice = a;; choice = (choice - 1) & a) {
      table[a] = choice;
      fill(a + 1);
      if (choice == 0) break;
    }
  };
  fill(0);
  return out;
}

// Menu literal from item indices, e.g. menu_of({0, 2}).
inline Menu menu_of(std::initializer_list<int> items) {
  Menu m = 0;
  for (int i : items) m = menu_with(m, i);
  return m;
}

}  // namespace qc::test
