#include "quasichoice/represent.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "quasichoice/parallel.hpp"
#include "quasichoice/solvers.hpp"

namespace qc {

namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void count_endorsements(const BallotFamily& family, Menu menu,
                        std::array<std::uint64_t, kAbsoluteMaxItems>& counts) {
  counts.fill(0);
  for (const auto& member : family.members) {
    Menu sel = member->choice.table[menu];
    while (sel) {
      int p = lowest_item(sel);
      sel = menu_without(sel, p);
      ++counts[p];
    }
  }
}

}  // namespace

VerifyOutcome verify(const QuasiChoice& c, const BallotFamily& family,
                     Share share) {
  if (!same_universe(c.grand, family.grand))
    throw Error("choice and family live on different grand sets");
  const std::uint64_t k = family.size();
  const std::size_t menus = c.grand.menu_count();

  // parallel_chunks never uses more chunks than workers
  std::vector<std::optional<VerifyCounterexample>> found(thread_count());

  std::size_t chunks = parallel_chunks(menus, [&](std::size_t begin,
                                                  std::size_t end,
                                                  std::size_t chunk) {
    std::array<std::uint64_t, kAbsoluteMaxItems> counts{};
    for (std::size_t a = begin; a < end; ++a) {
      Menu menu = static_cast<Menu>(a);
      count_endorsements(family, menu, counts);
      for (Menu rest = menu; rest;) {
        int p = lowest_item(rest);
        rest = menu_without(rest, p);
        bool majority = share.exceeded_by(counts[p], k);
        bool chosen = c.chooses(menu, p);
        if (majority != chosen) {
          if (!found[chunk])
            found[chunk] = VerifyCounterexample{
                menu, p, counts[p], k,
                chosen ? VerifyCounterexample::Direction::should_be_chosen
                       : VerifyCounterexample::Direction::should_be_rejected};
          return;
        }
      }
    }
  });

  for (std::size_t i = 0; i < chunks; ++i)
    if (found[i]) return {found[i]};
  return {};
}

QuasiChoice induced_choice(const BallotFamily& family, Share share) {
  const std::uint64_t k = family.size();
  std::vector<Menu> table(family.grand.menu_count(), 0);
  std::array<std::uint64_t, kAbsoluteMaxItems> counts{};
  for (Menu menu = 0; menu < table.size(); ++menu) {
    count_endorsements(family, menu, counts);
    for (Menu rest = menu; rest;) {
      int p = lowest_item(rest);
      rest = menu_without(rest, p);
      if (share.exceeded_by(counts[p], k)) table[menu] = menu_with(table[menu], p);
    }
  }
  return QuasiChoice(family.grand, std::move(table));
}

BallotFamily synth_liberal(const QuasiChoice& c) {
  auto alpha = check_alpha(c);
  if (!alpha.is_ok()) throw AlphaViolated(*alpha.witness);

  auto chains = acceptance_antichains(c);
  std::size_t width = 1;
  for (const auto& chain : chains)
    width = std::max(width, chain.maximal_menus.size());

  const Menu full = c.grand.full();
  std::vector<Ballot> ballots;
  ballots.reserve(width);
  for (std::size_t j = 0; j < width; ++j) {
    std::vector<Menu> rows(c.grand.n);
    for (int p = 0; p < c.grand.n; ++p) {
      const auto& menus = chains[p].maximal_menus;
      if (menus.empty()) {
        rows[p] = Menu{1} << p;  // never selected
      } else {
        Menu coord = menus[std::min(j, menus.size() - 1)];
        rows[p] = full & ~coord;
      }
    }
    ballots.push_back(ballot_from_voter(Relation(c.grand, std::move(rows))));
  }
  return make_family(c.grand, std::move(ballots));
}

BallotFamily dem_from_lib(const BallotFamily& family) {
  auto members = family.members;
  auto neutral = std::make_shared<const Ballot>(neutral_ballot(family.grand));
  std::size_t k = family.size();
  members.reserve(2 * k);
  for (std::size_t i = 0; i < k; ++i) members.push_back(neutral);
  return BallotFamily(family.grand, std::move(members));
}

BallotFamily lib_from_dem(const BallotFamily& family) {
  const std::size_t k = family.size();
  if (k > 20)
    throw Error("lib_from_dem enumerates 2^(k-1) majorities; k > 20 refused");
  const int n = family.grand.n;

  std::vector<Ballot> ballots;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << k); ++subset) {
    if (2 * static_cast<std::size_t>(std::popcount(subset)) <= k) continue;
    std::vector<Menu> rows(n, 0);
    for (std::uint32_t rest = subset; rest;) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      const Relation& w = family[i].witness;
      for (int p = 0; p < n; ++p) rows[p] |= w.dominators[p];
    }
    ballots.push_back(ballot_from_voter(Relation(family.grand, std::move(rows))));
  }
  return make_family(family.grand, std::move(ballots));
}

Synthesis synth_majoritarian(const QuasiChoice& c, Share share,
                             std::uint64_t family_ceiling) {
  BallotFamily base = synth_liberal(c);
  const std::uint64_t n0 = base.size();

  if (share.is_zero()) {
    SynthesisTrace trace;
    trace.base_size = n0;
    trace.family_size = n0;
    return {std::move(base), trace};
  }

  // Smallest m with t = (m^2+m-1)/(m^2+n0*m) > share; t increases to 1.
  std::uint64_t m = 1;
  for (;; ++m) {
    u128 tn = u128(m) * m + m - 1;
    u128 td = u128(m) * m + u128(n0) * m;
    if (td > family_ceiling) throw SizeExceeded(static_cast<std::uint64_t>(td), family_ceiling);
    if (tn * share.den > u128(share.num) * td) break;
  }
  Share t(m * m + m - 1, m * m + n0 * m);
  const std::uint64_t p = m * m + n0 * m;

  // ratio = t/s - 1, reduced; the smallest replication r making
  // p * r * ratio an integer is den(ratio) / gcd(den(ratio), p).
  u128 rn = u128(t.num) * share.den - u128(share.num) * t.den;
  u128 rd = u128(share.num) * t.den;
  u128 g = gcd128(rn, rd);
  rn /= g;
  rd /= g;
  u128 r = rd / gcd128(rd, u128(p));
  u128 hyper = (u128(p) / gcd128(rd, u128(p))) * rn;  // = p * r * rn / rd
  u128 total = u128(p) * r + hyper;
  if (total > family_ceiling)
    throw SizeExceeded(static_cast<std::uint64_t>(
                           total > u128(~std::uint64_t{0}) ? ~std::uint64_t{0}
                                                           : total),
                       family_ceiling);

  auto neutral = std::make_shared<const Ballot>(neutral_ballot(c.grand));
  auto hypercritical =
      std::make_shared<const Ballot>(hypercritical_ballot(c.grand));

  std::vector<std::shared_ptr<const Ballot>> members;
  members.reserve(static_cast<std::size_t>(total));
  for (std::uint64_t rep = 0; rep < std::uint64_t(r); ++rep) {
    for (std::uint64_t i = 0; i < m * m; ++i) members.push_back(neutral);
    for (const auto& b : base.members)
      for (std::uint64_t i = 0; i < m; ++i) members.push_back(b);
  }
  for (std::uint64_t i = 0; i < std::uint64_t(hyper); ++i)
    members.push_back(hypercritical);

  SynthesisTrace trace;
  trace.base_size = n0;
  trace.m = m;
  trace.t = t;
  trace.neutral_added = m * m * std::uint64_t(r);
  trace.hypercritical_added = std::uint64_t(hyper);
  trace.replication_factor = std::uint64_t(r);
  trace.family_size = std::uint64_t(total);
  return {BallotFamily(c.grand, std::move(members)), trace};
}

}  // namespace qc
