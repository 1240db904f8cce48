#ifndef STOKES_EMISSION_HPP
#define STOKES_EMISSION_HPP

#include <iosfwd>
#include <vector>

#include "stokes/model.hpp"

namespace stokes {

inline constexpr int default_quad_nodes = 256;
inline constexpr double default_theta_max = 20.0 * deg_to_rad;
inline constexpr int default_scan_points = 2001;

// Peak-normalized angular distribution sampled along one scan plane.
struct AngularDistribution {
    double phi = 0.0;
    std::vector<double> thetas;  // strictly increasing, radians
    std::vector<double> values;  // in [0,1], max exactly 1
};

// Unnormalized P(k) = Int_V |S(r,k)|^2 dV, evaluated as the product of three
// 1-D mean-position integrals over the cell edges (fixed-order
// Gauss-Legendre per axis).
double emission_probability(const ExperimentModel& model, const StokesDirection& dir,
                            int nodes_per_axis = default_quad_nodes);

AngularDistribution angular_scan(const ExperimentModel& model, double phi,
                                 double theta_max, int n_points,
                                 int nodes_per_axis = default_quad_nodes);

// 2 * theta_half, where theta_half is the first 0.5 crossing of the
// peak-normalized scan (linear interpolation between bracketing samples).
// Throws NoHalfCrossing when the distribution never drops below 0.5.
double fwhm(const AngularDistribution& dist);

// Default 20-degree scan with a single retry at 180 degrees when no half
// crossing is found. Throws NoHalfCrossing if the full range is still flat.
double default_scan_fwhm(const ExperimentModel& model,
                         int nodes_per_axis = default_quad_nodes,
                         int n_points = default_scan_points);

// Cold limit, Int_V |u(r_perp)|^2 dV: direction independent by construction.
double cold_limit_distribution(const ExperimentModel& model, const StokesDirection& dir);

// Hot limit |F(Delta k)|^2 with F the windowed Fourier transform of the
// pump profile over a uniform cloud.
double hot_limit_distribution(const ExperimentModel& model, const StokesDirection& dir);

// CSV: "theta_deg,p_normalized", 15 significant digits, deterministic.
void write_csv(const AngularDistribution& dist, std::ostream& out);

}  // namespace stokes

#endif
