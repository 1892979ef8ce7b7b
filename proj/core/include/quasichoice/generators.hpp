#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "quasichoice/types.hpp"

namespace qc {

/// The worked examples used throughout the test suites and the CLI.
enum class FixtureId {
  watson,       // decisive, rationalizable ({x,y,z}, one rejection)
  nonliberal,   // violates contraction consistency
  lib2_dem3,    // lib = 2, dem = 3
  dem5_lib10,   // c_{5,3}: dem <= 5 while lib = 10
  dem_eq_lib,   // 4-item choice with lib = 3
};

std::string_view fixture_name(FixtureId id);  // CLI spelling, e.g. "ex-lib2-dem3"
std::optional<FixtureId> fixture_from_name(std::string_view name);
std::vector<FixtureId> all_fixtures();

struct Fixture {
  QuasiChoice choice;
  /// Families stated alongside the example, when any; kept verbatim.
  std::optional<BallotFamily> liberal_family;
  std::optional<BallotFamily> democratic_family;
};

Fixture fixture(FixtureId id);

/// The near-neutral choice over {0,...,n}: item 0 is dropped exactly from
/// menus of size above k that contain it. Satisfies contraction consistency
/// for every 1 <= k <= n+1, and is extremal for the liberal number:
/// lib = C(n, k-1).
QuasiChoice gen_cnk(int n, int k);

/// The C(n, k-1) product ballots v_A(B) = B if B subseteq A else B \ {0},
/// one per k-menu A containing 0; a liberal representation of gen_cnk(n, k).
BallotFamily gen_cnk_liberal_family(int n, int k);

/// The n single-arrow ballots (i -> 0) padded with 2k-n-1 neutral ballots
/// (k > n/2) or n-2k hypercritical ballots (k <= n/2); a democratic
/// representation of gen_cnk(n, k) of size 2k-1 resp. 2(n-k).
BallotFamily gen_cnk_democratic_family(int n, int k);

/// A random quasi-choice satisfying contraction consistency: the pointwise
/// union of 1..5 random ballots (unions of ballots are exactly the
/// contraction-consistent quasi-choices). With `decisive` a random
/// linear-order ballot joins the union, so every nonempty menu selects
/// something. Deterministic per (n, seed, decisive): the generator is
/// std::mt19937_64 seeded with `seed`, consumed in a fixed order.
QuasiChoice random_alpha(int n, std::uint64_t seed, bool decisive = false);

}  // namespace qc
