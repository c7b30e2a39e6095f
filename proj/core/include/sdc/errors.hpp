#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdc {

// Invalid configuration (unknown family, malformed node set, bad option).
// The CLI maps these to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failure inside a solve.  The CLI maps these to exit code 1.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Newton ran out of iterations; carries the residual norm per iteration.
class NewtonDivergenceError : public SolverError {
 public:
  NewtonDivergenceError(const std::string& what, std::vector<double> residual_history)
      : SolverError(what), residual_history_(std::move(residual_history)) {}

  const std::vector<double>& residual_history() const noexcept { return residual_history_; }

 private:
  std::vector<double> residual_history_;
};

class SingularMatrixError : public SolverError {
 public:
  using SolverError::SolverError;
};

// Closed-form implicit substep hit a zero divisor (1 - alpha*lambda == 0).
class SingularSubstepError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace sdc
