#ifndef STOKES_ERRORS_HPP
#define STOKES_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace stokes {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested product exp(log_prefactor)*(erf(a)-erf(b)) does not fit in
// double range; signals a malformed physical configuration upstream.
struct OverflowUnrepresentable : Error {
    using Error::Error;
};

// Adaptive quadrature hit its refinement limit before reaching tolerance.
struct QuadratureNonConvergence : Error {
    using Error::Error;
};

struct NegativeTemperature : Error {
    using Error::Error;
};

// The scanned distribution never drops below half maximum: the emission is
// flat over the scanned range and no finite cone width exists.
struct NoHalfCrossing : Error {
    using Error::Error;
};

// Calibration failed strict FWHM monotonicity; carries the offending knots.
struct NonMonotoneCurve : Error {
    NonMonotoneCurve(const std::string& what, std::vector<std::size_t> idx)
        : Error(what), offending_indices(std::move(idx)) {}
    std::vector<std::size_t> offending_indices;
};

// A calibration temperature is too cold to produce a finite cone at this tau.
struct FlatRegime : Error {
    FlatRegime(const std::string& what, double temp_K)
        : Error(what), temperature_K(temp_K) {}
    double temperature_K;
};

struct OutOfCalibrationRange : Error {
    OutOfCalibrationRange(const std::string& what, double lo, double hi)
        : Error(what), fwhm_min_rad(lo), fwhm_max_rad(hi) {}
    double fwhm_min_rad;
    double fwhm_max_rad;
};

struct BracketInvalid : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

struct FingerprintMismatch : Error {
    using Error::Error;
};

struct ConfigParseError : Error {
    ConfigParseError(const std::string& what, std::size_t line)
        : Error(what), line_number(line) {}
    std::size_t line_number;
};

struct ConfigValidationError : Error {
    using Error::Error;
};

}  // namespace stokes

#endif
