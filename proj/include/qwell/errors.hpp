#pragma once

#include <stdexcept>

namespace qwell {

// Caller violated a precondition (bad flag value, wrong family, domain mismatch).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computation produced non-finite values or failed to converge.
struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested boundary condition admits only the trivial solution
// in the requested family.
struct UnsupportedBoundary : UsageError {
  using UsageError::UsageError;
};

}  // namespace qwell
