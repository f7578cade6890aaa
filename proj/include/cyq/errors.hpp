#pragma once

#include <stdexcept>

namespace cyq {

// Engineering failure: two code paths that must agree disagreed, an input
// matrix is corrupted, or a validation that can never fail failed.
// CLI maps this to exit code 2.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured size cap or node budget was exceeded.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cyq
