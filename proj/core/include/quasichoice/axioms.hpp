#pragma once

#include <optional>

#include "quasichoice/core.hpp"
#include "quasichoice/types.hpp"

namespace qc {

/// A concrete counterexample to one of the consistency axioms.
/// Alpha: item in menu_a subseteq menu_b, chosen from menu_b, dropped from
/// menu_a (always with |menu_b \ menu_a| = 1).
/// Gamma: item chosen from both menus but not from their union.
struct AxiomWitness {
  enum class Axiom { alpha, gamma };
  Axiom axiom;
  Menu menu_a;
  Menu menu_b;
  int item;
};

/// Witness search for gamma scans all menu pairs; above this size
/// check_gamma falls back to the rationalizability table test and reports a
/// witness-free verdict.
inline constexpr int kGammaWitnessMaxItems = 12;

struct CheckResult {
  enum class Status {
    ok,
    violated,
    /// Only check_gamma above kGammaWitnessMaxItems when alpha already
    /// fails: the fallback test cannot separate the two axioms.
    unknown,
  };
  Status status = Status::ok;
  std::optional<AxiomWitness> witness;

  bool is_ok() const { return status == Status::ok; }
};

/// Contraction consistency. Scanned through single-item contractions, which
/// is equivalent to the full quantifier by induction; the witness is minimal
/// under (menu_a, menu_b, item) lexicographic order.
CheckResult check_alpha(const QuasiChoice& c);

/// Expansion consistency: per item, the accepting menus are closed under
/// pairwise union. Witness minimal under (menu_a, menu_b, item), menu_a <
/// menu_b.
CheckResult check_gamma(const QuasiChoice& c);

struct RationalityClass {
  enum class Kind {
    not_rationalizable,
    freely_rationalizable,
    asymmetrically_rationalizable,
  };
  Kind kind;
  /// A rationalizing voter (the revealed relation) for the two
  /// rationalizable kinds.
  std::optional<Relation> rationalizer;
  /// An alpha or gamma counterexample for not_rationalizable; absent only
  /// when the gamma witness guard was hit.
  std::optional<AxiomWitness> violation;

  bool rationalizable() const { return kind != Kind::not_rationalizable; }
};

/// Decides free rationalizability by testing whether the revealed relation
/// reproduces the table, and upgrades to asymmetric when every singleton is
/// chosen and every pair menu has a nonempty choice.
RationalityClass classify(const QuasiChoice& c);

}  // namespace qc
