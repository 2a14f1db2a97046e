#pragma once

#include <stdexcept>
#include <string>

namespace eddy {

// Invalid argument or configuration (wrong domain, bad parameter set).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation failed numerically (non-convergence, overflow, bad pivot).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A denominator hit a zero (or numerically vanishing) value.
struct SingularityError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace eddy
