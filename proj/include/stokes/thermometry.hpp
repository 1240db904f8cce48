#ifndef STOKES_THERMOMETRY_HPP
#define STOKES_THERMOMETRY_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stokes/emission.hpp"
#include "stokes/model.hpp"

namespace stokes {

// Everything the forward model needs except the temperature.
struct CalibrationSetup {
    AtomSpecies species;
    CloudGeometry cell;
    double waist_r0 = 2e-3;
    double tau = 10e-6;
    int nodes_per_axis = default_quad_nodes;
    int scan_points = default_scan_points;
};

struct CalibrationPoint {
    double temperature_K;
    double fwhm_rad;
};

struct CalibrationCurve {
    double tau_s = 0.0;
    std::string model_fingerprint;
    std::vector<CalibrationPoint> points;  // T strictly increasing, fwhm strictly decreasing
};

// FNV-1a over the canonical parameter serialization; binds a curve to the
// exact geometry/species/pulse that produced it.
std::string model_fingerprint(const CalibrationSetup& setup);

// Full forward model: build the model at T, scan, extract the FWHM (with the
// default one-shot widening to 180 degrees). Throws NoHalfCrossing if flat.
double forward_fwhm(const CalibrationSetup& setup, double temperature_K);

// 32 log-spaced points over [1 mK, 300 K].
std::vector<double> default_t_grid();

// Strict calibration: every grid temperature must yield a finite FWHM
// (FlatRegime otherwise) and the curve must be strictly monotone
// (NonMonotoneCurve otherwise).
CalibrationCurve calibrate(const CalibrationSetup& setup,
                           const std::vector<double>& t_grid);

// Same, but drops flat-regime temperatures instead of failing; the dropped
// temperatures are reported through trimmed (may be null).
CalibrationCurve calibrate_trimmed(const CalibrationSetup& setup,
                                   const std::vector<double>& t_grid,
                                   std::vector<double>* trimmed);

// Monotone piecewise-cubic interpolation of log T against FWHM.
// Throws OutOfCalibrationRange outside the curve's FWHM span.
double invert_temperature(const CalibrationCurve& curve, double fwhm_measured_rad);

// Bisection of the full forward model against fwhm_measured until the
// relative temperature interval is below rel_tol. The bracket must satisfy
// forward_fwhm(t_lo) > fwhm_measured > forward_fwhm(t_hi), else BracketInvalid.
double refine_temperature(const CalibrationSetup& setup, double fwhm_measured_rad,
                          double t_lo, double t_hi, double rel_tol = 1e-3);

// Calibration file format, degrees in files / radians in memory:
//   # fingerprint=<hex>
//   # tau_s=<value>
//   # schema=stokes-thermo-cal-v1
//   temperature_K,fwhm_deg
//   <rows>
void save_curve(const CalibrationCurve& curve, std::ostream& out);
void save_curve(const CalibrationCurve& curve, const std::string& path);

// Load re-validates monotonicity; when expect is supplied the stored
// fingerprint must match (FingerprintMismatch otherwise).
CalibrationCurve load_curve(std::istream& in,
                            const std::optional<CalibrationSetup>& expect = {});
CalibrationCurve load_curve(const std::string& path,
                            const std::optional<CalibrationSetup>& expect = {});

}  // namespace stokes

#endif
