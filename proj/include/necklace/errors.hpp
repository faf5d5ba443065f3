#pragma once

#include <stdexcept>

namespace necklace {

// Error taxonomy shared by all modules. The CLI maps each class onto a
// distinct exit code (see tools/necklace_cli.cpp).

// Malformed arguments or a violated interface contract.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parameters outside the supported mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Evaluation too close to a pole of a closed-form expression.
struct PoleError : DomainError {
  using DomainError::DomainError;
};

// Work refused because it would blow past a hard size guard.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed: an identity the code relies on did not
// hold. Always a bug or a broken build, never a user error.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace necklace
