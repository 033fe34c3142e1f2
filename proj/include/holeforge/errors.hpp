#pragma once

#include <stdexcept>
#include <string>

namespace holeforge {

/// Vector or form lengths disagree, or a routine is asked for a dimension it
/// does not support.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a mathematical precondition (e.g. λ not pairwise coprime).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured limit (generator count, degree, search size) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal arithmetic invariant broken. Signals a bug, not bad input.
class ArithmeticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CertificationError : public std::runtime_error {
 public:
  CertificationError(std::string clause, const std::string& what)
      : std::runtime_error(clause + ": " + what), clause_(std::move(clause)) {}
  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace holeforge
