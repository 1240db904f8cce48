#ifndef STOKES_CONSTANTS_HPP
#define STOKES_CONSTANTS_HPP

namespace stokes {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double sqrt_pi = 1.77245385090551602730;
inline constexpr double deg_to_rad = pi / 180.0;
inline constexpr double rad_to_deg = 180.0 / pi;

// Exact SI value (2019 redefinition), J/K.
inline constexpr double boltzmann = 1.380649e-23;

// Default species: 87Rb pumped on the D1 line (5S1/2 -> 5P1/2).
inline constexpr double rb87_mass_kg = 1.44316e-25;
inline constexpr double rb87_d1_wavelength_m = 794.98e-9;

}  // namespace stokes

#endif
