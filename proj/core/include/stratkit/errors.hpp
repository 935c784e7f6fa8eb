#pragma once

#include <stdexcept>
#include <string>

namespace stratkit {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two values from different variable contexts were combined.
struct ContextMismatchError : Error {
  explicit ContextMismatchError(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// The global reduction-step budget was exhausted mid-computation.
struct BudgetExceededError : Error {
  explicit BudgetExceededError(const std::string& msg) : Error(msg) {}
};

// A pipeline invariant that should be unreachable was violated; kept as a
// distinct type so callers can surface it for audit instead of retrying.
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

}  // namespace stratkit
