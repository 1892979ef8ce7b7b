#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "quasichoice/types.hpp"

namespace qc::io {

/// Quasi-choice document. Grammar (one statement per line, '#' starts a
/// comment, blank lines ignored):
///
///   qc v1
///   n = <int>
///   items = <name> ...          (optional; defaults to 0..n-1)
///   default = none|identity|empty   (optional; defaults to none)
///   <item> ... -> <item> ...    (menu -> choice; empty right side = empty
///                                choice)
///
/// With default=none every nonempty menu must appear exactly once;
/// identity/empty fill unlisted menus. Chosen items must belong to their
/// menu; duplicate menus are rejected.
QuasiChoice parse_qc(std::istream& in, int max_items = kDefaultMaxItems);
QuasiChoice parse_qc(std::string_view text, int max_items = kDefaultMaxItems);
std::string serialize_qc(const QuasiChoice& c);

/// Ballots document: voters as edge lists.
///
///   ballots v1
///   n = <int>
///   items = <name> ...          (optional)
///   <item> -> <item>            (one arrow per line; loops allowed)
///   end                         (closes the current voter; a bare "end"
///                                is the empty relation)
///
/// At least one voter block is required. Serialization writes each ballot's
/// revealed relation, which is the canonical witness voter.
BallotFamily parse_ballots(std::istream& in, int max_items = kDefaultMaxItems);
BallotFamily parse_ballots(std::string_view text,
                           int max_items = kDefaultMaxItems);
std::string serialize_ballots(const BallotFamily& family);

/// Shares are exact fractions: "p/q" with 0 <= p/q < 1, or "0".
/// Decimal notation is rejected.
std::optional<Share> parse_share(std::string_view text);

}  // namespace qc::io
