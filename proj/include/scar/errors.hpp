#pragma once

#include <stdexcept>
#include <string>

namespace scar {

// Bad input: malformed literals, out-of-range parameters, invalid graphs.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A solver could not produce a result (caps, internal consistency checks).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapacityExceeded : public SolverError {
 public:
  using SolverError::SolverError;
};

class NonConvergence : public SolverError {
 public:
  using SolverError::SolverError;
};

class UniquenessViolation : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace scar
