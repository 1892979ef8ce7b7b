#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by the text-format parsers; `line` is 1-based.
struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

struct GrandSetTooLarge : Error {
  GrandSetTooLarge(int n, int limit)
      : Error("grand set of " + std::to_string(n) +
              " items exceeds the limit of " + std::to_string(limit)),
        n(n), limit(limit) {}
  int n;
  int limit;
};

struct ShareOutOfRange : Error {
  using Error::Error;
};

/// A synthesis would produce a family above the configured ceiling.
struct SizeExceeded : Error {
  SizeExceeded(std::uint64_t computed_size, std::uint64_t ceiling)
      : Error("synthesized family would have " + std::to_string(computed_size) +
              " ballots (ceiling " + std::to_string(ceiling) + ")"),
        computed_size(computed_size), ceiling(ceiling) {}
  std::uint64_t computed_size;
  std::uint64_t ceiling;
};

}  // namespace qc
