#include "stokes/model.hpp"

#include <cmath>
#include <stdexcept>

#include "stokes/errors.hpp"
#include "stokes/quadrature.hpp"

namespace stokes {

namespace {

constexpr double min_temperature_K = 1e-9;  // the A -> 0 limit is reached well above this

void validate_parts(const AtomSpecies& species, const CloudGeometry& cell,
                    const PumpPulse& pump) {
    if (!(species.mass_kg > 0.0)) throw std::invalid_argument("species mass must be > 0");
    if (!(species.transition_wavelength_m > 0.0))
        throw std::invalid_argument("transition wavelength must be > 0");
    if (!(cell.lx > 0.0 && cell.ly > 0.0 && cell.lz > 0.0))
        throw std::invalid_argument("cell dimensions must be > 0");
    if (!(pump.waist_r0 > 0.0)) throw std::invalid_argument("beam waist must be > 0");
    if (!(pump.duration_tau > 0.0)) throw std::invalid_argument("pulse duration must be > 0");
}

}  // namespace

double most_probable_speed(const AtomSpecies& species, double temperature_K) {
    if (temperature_K < 0.0)
        throw NegativeTemperature("most_probable_speed: temperature below 0 K");
    return std::sqrt(2.0 * boltzmann * temperature_K / species.mass_kg);
}

double motion_radius(const AtomSpecies& species, double temperature_K, double tau_s) {
    if (!(tau_s > 0.0)) throw std::invalid_argument("motion_radius: tau must be > 0");
    return most_probable_speed(species, temperature_K) * tau_s;
}

ExperimentModel ExperimentModel::from_temperature(const AtomSpecies& species,
                                                  const CloudGeometry& cell,
                                                  const PumpPulse& pump,
                                                  double temperature_K) {
    validate_parts(species, cell, pump);
    if (temperature_K < min_temperature_K)
        throw std::invalid_argument(
            "ExperimentModel: temperature below 1 nK; the closed form needs A > 0 "
            "(small finite A already reproduces the cold limit)");
    ThermalMotion motion{motion_radius(species, temperature_K, pump.duration_tau),
                         temperature_K, pump.duration_tau};
    return {species, cell, pump, motion};
}

ExperimentModel ExperimentModel::from_motion_radius(const AtomSpecies& species,
                                                    const CloudGeometry& cell,
                                                    const PumpPulse& pump,
                                                    double radius_A_m) {
    validate_parts(species, cell, pump);
    if (!(radius_A_m > 0.0))
        throw std::invalid_argument("ExperimentModel: motion radius must be > 0");
    // T from A = sqrt(2 K_B T / m) * tau
    const double v = radius_A_m / pump.duration_tau;
    const double temperature = v * v * species.mass_kg / (2.0 * boltzmann);
    ThermalMotion motion{radius_A_m, temperature, pump.duration_tau};
    return {species, cell, pump, motion};
}

Vec3 delta_k(const ExperimentModel& model, const StokesDirection& dir) {
    const double k0 = model.species().k0();
    const double st = std::sin(dir.theta);
    return {k0 * st * std::cos(dir.phi), k0 * st * std::sin(dir.phi),
            k0 * (std::cos(dir.theta) - 1.0)};
}

Complex windowed_gaussian_fourier(double center_c, double freq_q, double motion_A,
                                  double beam_w, double half_window_L) {
    const double A = motion_A, w = beam_w, L = half_window_L;
    // beta = sigma^2/A^2 = w^2/(w^2+A^2); stays exact for w = infinity
    const double ratio = A / w;  // 0 for infinite beam
    const double beta = 1.0 / (1.0 + ratio * ratio);
    const double sigma = A * std::sqrt(beta);

    // C = -beta (c/w)^2 - Y^2 - i q c beta with Y = sigma q / 2 (no
    // b^2/sigma^2 - c^2/A^2 cancellation). Y^2 reappears inside the erf
    // arguments squared; carrying it as an error-free product keeps the
    // pieces of the paired difference accurate after it cancels.
    const double y = 0.5 * sigma * freq_q;
    const double y2 = y * y;
    const double y2_err = std::fma(y, y, -y2);
    const double cw = center_c / w;  // 0 for infinite beam
    const double beam_term = -beta * cw * cw;
    const double re_hi = beam_term - y2;
    const double bb = re_hi - beam_term;  // two_sum residual of the addition
    const double re_lo = (beam_term - (re_hi - bb)) + (-y2 - bb) - y2_err;
    const Complex c_hi(re_hi, -freq_q * center_c * beta);
    const Complex c_lo(re_lo, 0.0);

    // share the exact same Y between prefactor and erf arguments
    const double bc = beta * center_c;
    const Complex p((0.5 * L - bc) / sigma, y);
    const Complex mneg(-(0.5 * L + bc) / sigma, y);
    return 0.5 * std::sqrt(beta) * pair_erf_diff(p, mneg, c_hi, c_lo);
}

Complex windowed_gaussian_fourier_quadrature(double center_c, double freq_q,
                                             double motion_A, double beam_w,
                                             double half_window_L, double abs_tol) {
    const double A = motion_A, w = beam_w, L = half_window_L;
    const double norm = 1.0 / (sqrt_pi * A);
    auto f = [&](double x) -> Complex {
        const double dx = (x - center_c) / A;
        const double xw = x / w;  // 0 for infinite beam
        double e = -dx * dx - xw * xw;
        if (e < -745.0) return 0.0;
        const double mag = norm * std::exp(e);
        // error-free phase product: q x can reach 1e5 rad and plain rounding
        // would put ~|q x| eps of phase noise on every sample
        const double p = freq_q * x;
        const double plo = std::fma(freq_q, x, -p);
        const double cp = std::cos(p), sp = std::sin(p);
        return {mag * (cp - sp * plo), -mag * (sp + cp * plo)};
    };
    std::vector<double> breaks;
    for (double k : {1.0, 3.0, 6.0, 9.0, 12.0}) {
        breaks.push_back(center_c - k * A);
        breaks.push_back(center_c + k * A);
        if (std::isfinite(w)) {
            breaks.push_back(-k * w);
            breaks.push_back(k * w);
        }
    }
    breaks.push_back(center_c);
    // node positions are rounded doubles, so each sample carries about
    // |q x| eps of phase noise
    const double noise = 1.0 + 0.2 * std::abs(freq_q) * (0.5 * L + std::abs(center_c));
    return integrate_adaptive(f, -0.5 * L, 0.5 * L, abs_tol, breaks, 200000, noise);
}

Complex amplitude(const ExperimentModel& model, const Vec3& mean_pos,
                  const StokesDirection& dir) {
    const CloudGeometry& cell = model.cell();
    if (std::abs(mean_pos[0]) > 0.5 * cell.lx || std::abs(mean_pos[1]) > 0.5 * cell.ly ||
        std::abs(mean_pos[2]) > 0.5 * cell.lz)
        throw std::invalid_argument("amplitude: mean position outside the cell");
    const Vec3 dk = delta_k(model, dir);
    const double A = model.motion().radius_A;
    const double r0 = model.pump().waist_r0;
    return windowed_gaussian_fourier(mean_pos[0], dk[0], A, r0, cell.lx) *
           windowed_gaussian_fourier(mean_pos[1], dk[1], A, r0, cell.ly) *
           windowed_gaussian_fourier(mean_pos[2], dk[2], A, infinite_beam, cell.lz);
}

}  // namespace stokes
