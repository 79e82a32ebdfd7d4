#pragma once

#include <stdexcept>
#include <string>

namespace xychain {

// Base for everything this library throws deliberately. CLI maps these to exit 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters outside the validity domain (t < 0, alpha < 1, empty bracket, ...).
struct DomainError : Error {
    using Error::Error;
};

// Adaptive integrator exhausted its panel budget before meeting the tolerance.
struct QuadratureNonConvergence : Error {
    using Error::Error;
};

// Jacobi sweeps failed to reduce off-diagonal mass (NaN input or pathological matrix).
struct EigenNonConvergence : Error {
    using Error::Error;
};

// Assembled density matrix has an eigenvalue below -1e-6: correlator input is
// inconsistent, not a legitimate state.
struct NotPositive : Error {
    using Error::Error;
};

// Density matrix violates its required zero pattern beyond tolerance.
struct ShapeViolation : Error {
    using Error::Error;
};

// Requested chain length exceeds what the dense solver can handle.
struct SizeLimit : Error {
    using Error::Error;
};

} // namespace xychain
