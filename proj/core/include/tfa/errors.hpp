#pragma once

#include <stdexcept>
#include <string>

namespace tfa {

/// Operands carry different precisions.
class PrecisionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of an operation (even input to an inverse,
/// bit index past the word, index past a table).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive work requested beyond a configured size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A criterion cannot be decided at the available precision.
class InsufficientPrecision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inverse coefficient reconstruction requested on a table that is not ergodic.
class NotErgodic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed coefficient-table file or JSON document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tfa
