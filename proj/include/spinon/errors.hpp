#pragma once

#include <stdexcept>
#include <string>

namespace spinon {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// (w, k) not strictly inside the two-spinon continuum.
struct OutsideBand : DomainError {
    using DomainError::DomainError;
};

// k = 0 or 2pi: the continuum has zero width, inversion is ill-posed.
struct DegenerateWindow : DomainError {
    using DomainError::DomainError;
};

// Adaptive integrator ran out of subdivisions before meeting tolerance.
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative solver exhausted its budget.
struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chain size unsupported by the dense diagnostics.
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace spinon
