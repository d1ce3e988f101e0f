#pragma once

#include <stdexcept>
#include <string>

namespace lumpspace {

// Bad arguments: the caller violated a precondition or passed invalid flags.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation (e.g. a zero lift).
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A computation that cannot meet its accuracy contract (non-finite values,
// quadrature that fails to converge, a Gram matrix that is not positive).
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lumpspace
