#ifndef STOKES_MODEL_HPP
#define STOKES_MODEL_HPP

#include <array>
#include <limits>

#include "stokes/cerf.hpp"
#include "stokes/constants.hpp"

namespace stokes {

using Vec3 = std::array<double, 3>;

struct AtomSpecies {
    double mass_kg = rb87_mass_kg;
    double transition_wavelength_m = rb87_d1_wavelength_m;

    double k0() const { return two_pi / transition_wavelength_m; }
};

struct CloudGeometry {
    double lx = 2e-3;
    double ly = 2e-3;
    double lz = 30e-3;

    double volume() const { return lx * ly * lz; }
};

struct PumpPulse {
    double waist_r0 = 2e-3;
    double duration_tau = 10e-6;
};

// Radius A(T) = v_a * tau of the Gaussian blur each atom traces out around
// its mean position during the pump pulse.
struct ThermalMotion {
    double radius_A;
    double temperature;
    double tau;
};

struct StokesDirection {
    double theta;  // polar angle from the pump axis z, [0, pi]
    double phi;    // azimuth, [0, 2*pi)
};

class ExperimentModel {
  public:
    static ExperimentModel from_temperature(const AtomSpecies& species,
                                            const CloudGeometry& cell,
                                            const PumpPulse& pump,
                                            double temperature_K);
    // Direct-radius construction: A given explicitly, temperature derived from
    // A = v_a(T) * tau.
    static ExperimentModel from_motion_radius(const AtomSpecies& species,
                                              const CloudGeometry& cell,
                                              const PumpPulse& pump,
                                              double radius_A_m);

    const AtomSpecies& species() const { return species_; }
    const CloudGeometry& cell() const { return cell_; }
    const PumpPulse& pump() const { return pump_; }
    const ThermalMotion& motion() const { return motion_; }

  private:
    ExperimentModel(AtomSpecies s, CloudGeometry c, PumpPulse p, ThermalMotion m)
        : species_(s), cell_(c), pump_(p), motion_(m) {}

    AtomSpecies species_;
    CloudGeometry cell_;
    PumpPulse pump_;
    ThermalMotion motion_;
};

// Most probable Maxwell-Boltzmann speed sqrt(2 K_B T / m).
// Throws NegativeTemperature for T < 0.
double most_probable_speed(const AtomSpecies& species, double temperature_K);

// A(T) = v_a * tau.
double motion_radius(const AtomSpecies& species, double temperature_K, double tau_s);

// Delta k = k - k0 z, with |k| fixed to k0 (the Stokes shift is negligible
// against the optical frequency, so Delta k is frequency independent).
Vec3 delta_k(const ExperimentModel& model, const StokesDirection& dir);

// Marker for the z-axis factor, where the pump profile does not enter.
inline constexpr double infinite_beam = std::numeric_limits<double>::infinity();

// One-dimensional factor of the emission amplitude:
//
//   G = Int_{-L/2}^{L/2} dx (1/(sqrt(pi) A)) exp(-(x-c)^2/A^2)
//         * exp(-x^2/w^2) * exp(-i q x)
//
// evaluated in closed form,
//   G = (sigma/(2A)) exp(C) [erf((L/2-b)/sigma) + erf((L/2+b)/sigma)],
//   1/sigma^2 = 1/A^2 + 1/w^2, b = sigma^2 (c/A^2 - iq/2),
//   C = -c^2 sigma^2/(A^2 w^2) - sigma^2 q^2/4 - i q c sigma^2/A^2,
// with the prefactor and erf difference paired so nothing overflows.
Complex windowed_gaussian_fourier(double center_c, double freq_q, double motion_A,
                                  double beam_w, double half_window_L);

// Same integral by adaptive quadrature; slow reference for tests.
Complex windowed_gaussian_fourier_quadrature(double center_c, double freq_q,
                                             double motion_A, double beam_w,
                                             double half_window_L,
                                             double abs_tol = 1e-10);

// Stokes emission amplitude S(r_i, k) for an atom with mean position
// mean_pos: the product of the three 1-D factors (x and y see the pump
// waist, z does not).
Complex amplitude(const ExperimentModel& model, const Vec3& mean_pos,
                  const StokesDirection& dir);

}  // namespace stokes

#endif
