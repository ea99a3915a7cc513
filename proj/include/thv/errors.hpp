#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thv {

/// Base class for all engine errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generator index (or an index produced by bracketing) left the safe range.
struct RangeError : Error {
  using Error::Error;
};

/// API misuse: mismatched generator orders, empty ideal, bad window, ...
struct UsageError : Error {
  using Error::Error;
};

/// A module action left the truncated basis (Verma depth / series window).
struct TruncationError : Error {
  using Error::Error;
};

/// Rewriting exceeded the configured step budget. Resource limit, not a
/// wrong answer.
struct StepBudgetError : Error {
  using Error::Error;
};

/// Syntax error with position information (0-based offset, 1-based line/col).
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t offset, int line, int col)
      : Error(msg), offset(offset), line(line), col(col) {}
  std::size_t offset;
  int line;
  int col;
};

}  // namespace thv
