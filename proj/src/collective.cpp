#include "stokes/collective.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "axis_integrals.hpp"
#include "stokes/emission.hpp"
#include "stokes/errors.hpp"
#include "stokes/parallel.hpp"
#include "stokes/quadrature.hpp"

namespace stokes {

double symmetric_weight(const ExperimentModel& model, const StokesDirection& dir,
                        int nodes_per_axis) {
    const Vec3 dk = delta_k(model, dir);
    const double A = model.motion().radius_A;
    const double r0 = model.pump().waist_r0;

    // per axis: |Int G dc|^2 / (L * Int |G|^2 dc)
    auto axis_weight = [&](double q, double beam_w, double L) {
        const Complex coherent =
            detail::axis_coherent_integral(q, A, beam_w, L, nodes_per_axis);
        const double power = detail::axis_power_integral(q, A, beam_w, L, nodes_per_axis);
        return std::norm(coherent) / (L * power);
    };

    return axis_weight(dk[0], r0, model.cell().lx) *
           axis_weight(dk[1], r0, model.cell().ly) *
           axis_weight(dk[2], infinite_beam, model.cell().lz);
}

WeightProfile weight_scan(const ExperimentModel& model, double phi, double theta_max,
                          int n_points, int nodes_per_axis) {
    if (!(theta_max > 0.0 && theta_max <= pi))
        throw std::invalid_argument("weight_scan: theta_max must be in (0, pi]");
    if (n_points < 3) throw std::invalid_argument("weight_scan: need at least 3 points");

    WeightProfile profile;
    profile.thetas.resize(n_points);
    profile.weights.resize(n_points);
    for (int i = 0; i < n_points; ++i)
        profile.thetas[i] = theta_max * i / (n_points - 1);

    parallel_for(n_points, [&](std::size_t i) {
        const double w = symmetric_weight(model, {profile.thetas[i], phi}, nodes_per_axis);
        profile.weights[i] = std::clamp(w, 0.0, 1.0);
    });

    try {
        profile.fwhm_marker =
            fwhm(angular_scan(model, phi, theta_max, n_points, nodes_per_axis));
    } catch (const NoHalfCrossing&) {
        profile.fwhm_marker.reset();
    }
    return profile;
}

void write_csv(const WeightProfile& profile, std::ostream& out) {
    out << "theta_deg,symmetric_weight\n";
    char line[80];
    for (std::size_t i = 0; i < profile.thetas.size(); ++i) {
        std::snprintf(line, sizeof line, "%.15g,%.15g\n", profile.thetas[i] * rad_to_deg,
                      profile.weights[i]);
        out << line;
    }
}

}  // namespace stokes
