#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metab {

// Bad user input: malformed expressions, out-of-range generators.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string &msg, std::size_t at)
      : std::runtime_error(msg + " (at position " + std::to_string(at) + ")"),
        pos(at) {}
};

// Mathematically invalid request: cap/rank mismatch, non-unit inverse,
// failed divisibility, data outside the embedding image.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A self-check inside an algorithm failed; indicates a bug, not bad input.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace metab
