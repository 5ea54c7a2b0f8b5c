#pragma once

#include <stdexcept>
#include <string>

namespace rindler_ferm {

/// Argument outside the mathematical domain of an operation (e.g. m out of range, a <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inconsistent configuration: mismatched field kind, coincident Rob modes, n = 0, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The brute-force path refused an instance that is too large.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A partial transpose did not decompose into 1x1 and 2x2 components.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rindler_ferm
