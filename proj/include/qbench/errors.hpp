#pragma once

#include <stdexcept>
#include <string>

namespace qbench {

/// Base class for all qbench errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Circuit or device width limits exceeded, or qubit index out of range.
class WidthError : public Error {
 public:
  using Error::Error;
};

/// Malformed, unknown, non-native or non-unitary gate.
class GateError : public Error {
 public:
  using Error::Error;
};

/// Rejection-sampling budget exhausted.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Mismatched widths between two objects (samples vs table, ...).
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument values: out-of-range rates, empty input,
/// degenerate variance, disconnected graph.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace qbench
