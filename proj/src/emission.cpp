#include "stokes/emission.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "axis_integrals.hpp"
#include "stokes/errors.hpp"
#include "stokes/parallel.hpp"
#include "stokes/quadrature.hpp"

namespace stokes {

double emission_probability(const ExperimentModel& model, const StokesDirection& dir,
                            int nodes_per_axis) {
    const Vec3 dk = delta_k(model, dir);
    const double A = model.motion().radius_A;
    const double r0 = model.pump().waist_r0;
    const CloudGeometry& cell = model.cell();
    return detail::axis_power_integral(dk[0], A, r0, cell.lx, nodes_per_axis) *
           detail::axis_power_integral(dk[1], A, r0, cell.ly, nodes_per_axis) *
           detail::axis_power_integral(dk[2], A, infinite_beam, cell.lz, nodes_per_axis);
}

AngularDistribution angular_scan(const ExperimentModel& model, double phi,
                                 double theta_max, int n_points, int nodes_per_axis) {
    if (!(theta_max > 0.0 && theta_max <= pi))
        throw std::invalid_argument("angular_scan: theta_max must be in (0, pi]");
    if (n_points < 3) throw std::invalid_argument("angular_scan: need at least 3 points");

    AngularDistribution dist;
    dist.phi = phi;
    dist.thetas.resize(n_points);
    dist.values.resize(n_points);
    for (int i = 0; i < n_points; ++i)
        dist.thetas[i] = theta_max * i / (n_points - 1);

    parallel_for(n_points, [&](std::size_t i) {
        dist.values[i] =
            emission_probability(model, {dist.thetas[i], phi}, nodes_per_axis);
    });

    const double peak = *std::max_element(dist.values.begin(), dist.values.end());
    for (double& v : dist.values) v /= peak;
    return dist;
}

double fwhm(const AngularDistribution& dist) {
    if (dist.values.size() < 2 || dist.values.front() < 1.0 - 1e-9)
        throw std::invalid_argument("fwhm: scan must be peak-normalized with peak at theta=0");
    for (std::size_t i = 0; i + 1 < dist.values.size(); ++i) {
        if (dist.values[i] >= 0.5 && dist.values[i + 1] < 0.5) {
            const double t0 = dist.thetas[i], t1 = dist.thetas[i + 1];
            const double v0 = dist.values[i], v1 = dist.values[i + 1];
            const double theta_half = t0 + (0.5 - v0) * (t1 - t0) / (v1 - v0);
            return 2.0 * theta_half;  // P is even in theta
        }
    }
    throw NoHalfCrossing("fwhm: distribution stays above half maximum over the scan");
}

double default_scan_fwhm(const ExperimentModel& model, int nodes_per_axis, int n_points) {
    try {
        return fwhm(angular_scan(model, 0.0, default_theta_max, n_points, nodes_per_axis));
    } catch (const NoHalfCrossing&) {
        return fwhm(angular_scan(model, 0.0, pi, n_points, nodes_per_axis));
    }
}

double cold_limit_distribution(const ExperimentModel& model, const StokesDirection&) {
    const double r0 = model.pump().waist_r0;
    auto beam_power = [&](double L) {
        // Int_{-L/2}^{L/2} exp(-2 x^2/r0^2) dx
        return r0 * std::sqrt(pi / 2.0) * std::erf(L / (std::sqrt(2.0) * r0));
    };
    return beam_power(model.cell().lx) * beam_power(model.cell().ly) * model.cell().lz;
}

double hot_limit_distribution(const ExperimentModel& model, const StokesDirection& dir) {
    const Vec3 dk = delta_k(model, dir);
    const double r0 = model.pump().waist_r0;
    auto beam_factor = [&](double q, double L) {
        // Int_{-L/2}^{L/2} exp(-x^2/r0^2 - i q x) dx
        const Complex b(0.0, -0.5 * q * r0 * r0);
        const Complex c(-0.25 * q * q * r0 * r0, 0.0);
        const Complex p = (0.5 * L - b) / r0;
        const Complex m = (0.5 * L + b) / r0;
        return 0.5 * r0 * sqrt_pi * pair_erf_diff(p, -m, c);
    };
    auto slab_factor = [](double q, double L) {
        if (q == 0.0) return L;
        return 2.0 * std::sin(0.5 * q * L) / q;
    };
    const Complex fx = beam_factor(dk[0], model.cell().lx);
    const Complex fy = beam_factor(dk[1], model.cell().ly);
    const double fz = slab_factor(dk[2], model.cell().lz);
    return std::norm(fx) * std::norm(fy) * fz * fz;
}

void write_csv(const AngularDistribution& dist, std::ostream& out) {
    out << "theta_deg,p_normalized\n";
    char line[80];
    for (std::size_t i = 0; i < dist.thetas.size(); ++i) {
        std::snprintf(line, sizeof line, "%.15g,%.15g\n", dist.thetas[i] * rad_to_deg,
                      dist.values[i]);
        out << line;
    }
}

}  // namespace stokes
