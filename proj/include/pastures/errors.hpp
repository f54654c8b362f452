#pragma once

#include <stdexcept>
#include <string>

namespace pastures {

// Invalid mathematical input object. The CLI maps this to exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured cap was exceeded, or a bounded search gave up without an
// answer. The CLI maps this to exit code 2.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed invocation: bad flags, missing files, unknown names.
// The CLI maps this to exit code 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace pastures
