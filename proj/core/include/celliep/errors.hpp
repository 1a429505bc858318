#pragma once

#include <stdexcept>
#include <string>

namespace celliep {

/// A precondition on the input was violated (bad vector, wrong shape, out of range index...).
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative method exhausted its budget.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace celliep
