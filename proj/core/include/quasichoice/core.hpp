#pragma once

#include <cstdint>

#include "quasichoice/types.hpp"

namespace qc {

/// Non-dominated selection: {a in menu : no b in menu with b -> a}.
Menu max_set(const Relation& rel, Menu menu);

/// The ballot induced by a voter: choice table A |-> max_set(rel, A) over
/// all 2^n menus, with the voter kept as witness.
Ballot ballot_from_voter(Relation rel);

/// The revealed dominance relation of a quasi-choice:
///   p -> p   iff  p not chosen from {p};
///   x -> p   iff  p not chosen from {p,x} while p is chosen from {p}.
/// It rationalizes c exactly when c is freely rationalizable.
Relation revealed_relation(const QuasiChoice& c);

/// The whole family concatenated `times` times: (v,w) x2 = (v,w,v,w).
BallotFamily replicate(const BallotFamily& family, std::uint64_t times);

QuasiChoice identity_choice(GrandSet grand);
QuasiChoice null_choice(GrandSet grand);

/// Ballot of the empty relation (selects everything).
Ballot neutral_ballot(const GrandSet& grand);
/// Ballot of the all-loops relation (selects nothing).
Ballot hypercritical_ballot(const GrandSet& grand);

}  // namespace qc
