#ifndef ESCHER_ERRORS_HPP
#define ESCHER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace escher {

// Numeric comparison could not be decided within the precision cap.
struct AmbiguousComparison : std::runtime_error {
  explicit AmbiguousComparison(const std::string& what)
      : std::runtime_error(what) {}
};

// Operand outside R u sR where the operation requires it.
struct NotEscherian : std::runtime_error {
  explicit NotEscherian(const std::string& what) : std::runtime_error(what) {}
};

// Operand must be a plain real.
struct NotReal : std::runtime_error {
  explicit NotReal(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDivisor : std::runtime_error {
  explicit ZeroDivisor(const std::string& what) : std::runtime_error(what) {}
};

// Rank/operand combination has no defined value (log of a non-positive
// number, tetration of a non-integer height, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownLaw : std::runtime_error {
  explicit UnknownLaw(const std::string& what) : std::runtime_error(what) {}
};

struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) +
                           ")"),
        pos(position) {}
  std::size_t pos;
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace escher

#endif
