#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "quasichoice/types.hpp"

namespace qc {

/// The subset-maximal menus from which `item` is chosen: a Sperner family.
/// Its size is exactly the number of distinct ballots any liberal
/// representation needs for this item.
struct AcceptanceAntichain {
  int item;
  std::vector<Menu> maximal_menus;  // ascending by mask
};

/// One antichain per item (possibly empty), for any quasi-choice.
std::vector<AcceptanceAntichain> acceptance_antichains(const QuasiChoice& c);

struct LibNumber {
  bool is_infinite = false;
  std::uint64_t value = 0;  // meaningful when finite
};

/// Exact size of the smallest liberal representation: infinite iff
/// contraction consistency fails, else max(1, max_p |antichain_p|).
/// Upper bound witnessed by synth_liberal; lower bound because two distinct
/// maximal menus of one item can never share a ballot.
LibNumber lib_number(const QuasiChoice& c);

struct DemLimits {
  int max_items = 4;
  std::uint64_t node_cap = 50'000'000;
  std::chrono::milliseconds timeout{0};  // 0 = unlimited
};

struct DemResult {
  enum class Kind { exact, interval, infinite };
  Kind kind = Kind::infinite;
  std::uint64_t value = 0;            // exact
  std::uint64_t lo = 0, hi = 0;       // interval endpoints (inclusive)
  std::uint64_t explored = 0;         // search nodes visited
  std::optional<BallotFamily> family; // witness for exact results
};

/// Exact size of the smallest democratic representation, searched over
/// k = 1 .. 2*lib(c). Ballots factor into independent per-item acceptance
/// coordinates, so feasibility at a given k decomposes into one small
/// multiset search per item; see oracle_dem for the direct multiset search
/// used to validate this. On node/timeout exhaustion returns an honest
/// interval. Throws GrandSetTooLarge above limits.max_items.
DemResult dem_number(const QuasiChoice& c, const DemLimits& limits = {});

inline constexpr int kOracleMaxItems = 3;

/// Brute-force minimal liberal representation size: enumerates every voter
/// relation, deduplicates the induced ballots, and searches unions of the
/// ballots lying pointwise under c. NotFound (nullopt) when no family of
/// size <= kmax represents c. Only for n <= 3.
std::optional<std::uint64_t> oracle_lib(const QuasiChoice& c,
                                        std::uint64_t kmax);

/// Brute-force minimal democratic representation size over multisets of the
/// full deduplicated ballot universe. Only for n <= 3.
std::optional<std::uint64_t> oracle_dem(const QuasiChoice& c,
                                        std::uint64_t kmax);

/// Exact binomial coefficient; arguments are limited to results that fit in
/// 64 bits (covers everything up to n = 64).
std::uint64_t binomial(unsigned n, unsigned k);

/// C(n-1, floor((n-1)/2)): the tight universal bound on lib over n items.
std::uint64_t sperner_bound(int n);

/// sperner_bound(n) * sqrt(n) / 2^n, the ratio tracked by the asymptotics:
/// exact integer binomials, one floating division at the end.
long double sperner_ratio(int n);

struct BoundsReport {
  int n = 0;
  LibNumber lib;
  DemResult dem;
  bool dem_from_relative_bounds = false;  // dem interval derived, not searched
  std::uint64_t sperner = 0;
  std::optional<bool> lib_within_sperner;  // absent when lib is infinite
  std::optional<bool> dem_le_two_lib;      // set when both numbers finite/exact
  std::optional<bool> lib_le_pow2_dem;
  long double ratio = 0.0L;
};

/// Everything quantitative about one quasi-choice: both numbers, the Sperner
/// bound check, the relative-bound checks, and the asymptotic ratio at this n.
/// When n exceeds limits.max_items the democratic number is reported as the
/// interval implied by the relative bounds instead of being searched.
BoundsReport bounds_report(const QuasiChoice& c, const DemLimits& limits = {});

}  // namespace qc
