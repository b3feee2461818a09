#pragma once

#include <stdexcept>
#include <string>

namespace ck {

/// Mismatched descriptors, malformed signatures, bad argument shapes.
struct StructuralError : std::invalid_argument {
  explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input outside the mathematical domain of the operation (not in the cone,
/// singular element, parameter outside the admissible set, ...).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Numerical failure: non-convergence, step-subdivision overflow, rank
/// instability.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ck
