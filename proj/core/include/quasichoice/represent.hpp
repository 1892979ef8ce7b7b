#pragma once

#include <cstdint>
#include <optional>

#include "quasichoice/axioms.hpp"
#include "quasichoice/types.hpp"

namespace qc {

/// Precondition failure for the constructive syntheses; quasi-choices
/// violating contraction consistency have no representation at any share.
struct AlphaViolated : Error {
  explicit AlphaViolated(AxiomWitness w)
      : Error("choice violates contraction consistency"), witness(w) {}
  AxiomWitness witness;
};

struct VerifyCounterexample {
  enum class Direction { should_be_chosen, should_be_rejected };
  Menu menu;
  int item;
  std::uint64_t count;        // endorsing ballots
  std::uint64_t family_size;  // k
  Direction direction;
};

struct VerifyOutcome {
  std::optional<VerifyCounterexample> counterexample;
  bool verified() const { return !counterexample.has_value(); }
};

/// Checks whether `family` is an s-majoritarian representation of c:
/// for every menu A and x in A,  x in c(A)  iff  count * den > num * k.
/// Integer arithmetic throughout; the first failure in (menu, item) order is
/// reported. Share 0 is the liberal rule, 1/2 the democratic one.
VerifyOutcome verify(const QuasiChoice& c, const BallotFamily& family,
                     Share share);

/// The quasi-choice defined pointwise by the majority test over `family`.
QuasiChoice induced_choice(const BallotFamily& family, Share share);

/// Minimal-width liberal representation: one ballot per column of the
/// per-item maximal-acceptance antichains, product-form
/// v(B) = {p in B : B subseteq C_p}. Throws AlphaViolated when no liberal
/// representation exists. Size = max(1, max_p |antichain_p|).
BallotFamily synth_liberal(const QuasiChoice& c);

/// Doubles a liberal family with neutral ballots; a verifying liberal
/// family of size k becomes a verifying democratic family of size 2k.
BallotFamily dem_from_lib(const BallotFamily& family);

/// One intersection ballot per strict-majority subfamily; a verifying
/// democratic family of size k becomes a verifying liberal family of size
/// sum_{j>k/2} C(k,j) <= 2^(k-1).
BallotFamily lib_from_dem(const BallotFamily& family);

/// How a family for an arbitrary rational share was assembled:
/// a liberal base of base_size ballots, then m^2 neutral ballots plus m
/// copies of each base ballot reaching intermediate share
/// t = (m^2+m-1) / (m^2 + base_size*m), then replication and hypercritical
/// padding to land exactly on the requested share.
struct SynthesisTrace {
  std::uint64_t base_size = 0;
  std::uint64_t m = 0;
  Share t;
  std::uint64_t neutral_added = 0;
  std::uint64_t hypercritical_added = 0;
  std::uint64_t replication_factor = 1;
  std::uint64_t family_size = 0;
};

struct Synthesis {
  BallotFamily family;
  SynthesisTrace trace;
};

inline constexpr std::uint64_t kDefaultFamilyCeiling = 1'000'000;

/// Builds a verifying family for any rational share in [0,1). Share 0
/// returns the liberal synthesis unchanged. Throws AlphaViolated or
/// SizeExceeded (the construction grows quadratically in m as s approaches
/// 1; the trace records the blow-up).
Synthesis synth_majoritarian(const QuasiChoice& c, Share share,
                             std::uint64_t family_ceiling = kDefaultFamilyCeiling);

}  // namespace qc
