#pragma once

#include <stdexcept>
#include <string>

namespace qgf {

/// Invalid configuration or model parameters (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-finite values or failed linear algebra during a run (CLI exit code 3).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A forward simulation produced non-finite state values.
struct SimulationError : NumericalError {
    using NumericalError::NumericalError;
};

/// An evaluation left the admissible domain (e.g. log of a non-positive value).
struct DomainError : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace qgf
