#pragma once

#include <stdexcept>
#include <string>

namespace liebound {

// Numerical failure that a caller can recover from by switching strategy
// (e.g. subdividing a path when a principal logarithm does not exist).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Principal matrix logarithm does not exist (eigenvalue on the closed
// negative real axis).
struct BranchFailure : NumericalError {
  using NumericalError::NumericalError;
};

// The requested closed form / special case does not apply to this input.
struct NotApplicable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Matrix logarithm exists but does not lie in the expected Lie algebra.
struct InvalidLog : NumericalError {
  using NumericalError::NumericalError;
};

// Path refinement could not produce any feasible decomposition.
struct NoDecomposition : NumericalError {
  using NumericalError::NumericalError;
};

// Hilbert-space-level comparison requested for a projective representation
// outside the local regime where such comparisons are meaningful.
struct LocalRegimeViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Energy budget at or below the spectral floor of the reference operator.
struct InvalidEnergyBudget : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operator requested for a representation that only exposes expectation
// functionals (the Lorentz scalar representation).
struct NotMaterializable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Quadrature or iterative scheme failed to converge to tolerance.
struct NonConvergence : NumericalError {
  using NumericalError::NumericalError;
};

// Bad experiment/CLI configuration.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace liebound
