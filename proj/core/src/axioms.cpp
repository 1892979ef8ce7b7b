#include "quasichoice/axioms.hpp"

#include <cassert>

namespace qc {

CheckResult check_alpha(const QuasiChoice& c) {
  const int n = c.grand.n;
  const Menu count = static_cast<Menu>(c.grand.menu_count());
  for (Menu a = 0; a < count; ++a) {
    for (int j = 0; j < n; ++j) {
      if (menu_contains(a, j)) continue;
      Menu b = menu_with(a, j);
      Menu dropped = a & c.table[b] & ~c.table[a];
      if (dropped)
        return {CheckResult::Status::violated,
                AxiomWitness{AxiomWitness::Axiom::alpha, a, b,
                             lowest_item(dropped)}};
    }
  }
  return {};
}

CheckResult check_gamma(const QuasiChoice& c) {
  if (c.grand.n > kGammaWitnessMaxItems) {
    // Table test: rationalizable iff alpha and gamma both hold.
    if (ballot_from_voter(revealed_relation(c)).choice == c) return {};
    if (check_alpha(c).is_ok())
      return {CheckResult::Status::violated, std::nullopt};
    return {CheckResult::Status::unknown, std::nullopt};
  }
  const Menu count = static_cast<Menu>(c.grand.menu_count());
  for (Menu a = 1; a < count; ++a) {
    if (c.table[a] == 0) continue;
    for (Menu b = a + 1; b < count; ++b) {
      Menu dropped = c.table[a] & c.table[b] & ~c.table[a | b];
      if (dropped)
        return {CheckResult::Status::violated,
                AxiomWitness{AxiomWitness::Axiom::gamma, a, b,
                             lowest_item(dropped)}};
    }
  }
  return {};
}

RationalityClass classify(const QuasiChoice& c) {
  Relation revealed = revealed_relation(c);
  if (ballot_from_voter(revealed).choice == c) {
    bool asymmetric = true;
    for (int p = 0; p < c.grand.n && asymmetric; ++p)
      if (!c.chooses(Menu{1} << p, p)) asymmetric = false;
    for (Menu a = 0; a < c.grand.menu_count() && asymmetric; ++a)
      if (menu_size(a) == 2 && c.table[a] == 0) asymmetric = false;
    return {asymmetric ? RationalityClass::Kind::asymmetrically_rationalizable
                       : RationalityClass::Kind::freely_rationalizable,
            std::move(revealed), std::nullopt};
  }
  auto alpha = check_alpha(c);
  if (!alpha.is_ok())
    return {RationalityClass::Kind::not_rationalizable, std::nullopt,
            alpha.witness};
  auto gamma = check_gamma(c);
  assert(!gamma.is_ok());
  return {RationalityClass::Kind::not_rationalizable, std::nullopt,
          gamma.witness};
}

}  // namespace qc
