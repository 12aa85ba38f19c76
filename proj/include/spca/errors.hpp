#pragma once

#include <stdexcept>
#include <string>

namespace spca {

// Invalid argument or configuration (bad k, lambda <= 0, mismatched sizes...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input values outside the domain an operation accepts (non-finite entries).
class InputDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input that is valid in shape but degenerate for the operation.
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Enumeration would exceed the configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, long iteration)
      : std::runtime_error(what + " (iteration " + std::to_string(iteration) + ")"),
        iteration_(iteration) {}

  long iteration() const noexcept { return iteration_; }

 private:
  long iteration_;
};

}  // namespace spca
