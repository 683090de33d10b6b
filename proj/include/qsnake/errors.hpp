#pragma once

#include <stdexcept>
#include <string>

namespace qsnake {

// Precondition on a natural-number argument failed (e.g. k > n in a binomial).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// q^{1/2} cannot be evaluated at an integer point.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live over different quasi-commutation matrices or have the wrong
// length.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotQCommuting : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedDivisor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InhomogeneousElement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical invariant that must hold unconditionally was observed to fail.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qsnake
