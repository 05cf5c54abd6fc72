#pragma once

#include <stdexcept>
#include <string>

namespace hamming {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Subsystem geometry that a measure is not defined for (e.g. I_3 at q = 2).
class UnsupportedGeometry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense oracle asked for more vertices than its size cap allows.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Two routes that must agree did not; signals a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hamming
