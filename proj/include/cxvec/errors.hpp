#pragma once

#include <stdexcept>
#include <string>

namespace cxvec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit the operation (mismatched sizes, zero
/// dimension, odd length where an even one is required, ...).
struct DimensionError : Error {
    using Error::Error;
};

/// 1-based component index outside [1, dim].
struct IndexError : Error {
    using Error::Error;
};

/// A value expected to be real has an imaginary part beyond the tolerance.
struct NotRealError : Error {
    double imag_magnitude;
    NotRealError(const std::string& msg, double imag_mag)
        : Error(msg), imag_magnitude(imag_mag) {}
};

/// A transcendental evaluation left the finite range of the backend.
struct OverflowError : Error {
    using Error::Error;
};

/// The request is outside the supported physics model (total internal
/// reflection, non-TE polarization).
struct UnsupportedError : Error {
    using Error::Error;
};

/// Grazing incidence: the incident wavevector lies in the interface plane.
struct DegenerateIncidenceError : Error {
    using Error::Error;
};

/// Caller violated a documented precondition.
struct UsageError : Error {
    using Error::Error;
};

} // namespace cxvec
