#pragma once

#include <stdexcept>
#include <string>

namespace hartmann {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct IncompatibleDecay : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IncompatibleExponent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivergentIntegral : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidQuantumNumbers : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RiccatiMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace hartmann
