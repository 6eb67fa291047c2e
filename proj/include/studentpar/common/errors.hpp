#pragma once

#include <stdexcept>
#include <string>

namespace studentpar {

// Violated precondition: dimension mismatch, out-of-range index, missing
// forward cache and similar caller mistakes.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Non-finite values, degenerate fits, infeasible calibrations.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: config files, traces, checkpoints.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ContractError(message);
}

}  // namespace studentpar
