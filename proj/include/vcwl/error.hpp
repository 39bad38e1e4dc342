#pragma once

#include <stdexcept>
#include <string>

namespace vcwl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings with different variable counts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A homogeneity requirement was violated.
class GradingError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Random draws failed to produce a full-rank or invertible object.
class GenericityError : public Error {
 public:
  using Error::Error;
};

/// Independent generic initial ideal draws disagreed.
class InstabilityError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity contradicts a theorem the engine relies on.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Internal invariant broken; indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Operation refused because its precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace vcwl
