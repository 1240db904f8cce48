#ifndef STOKES_CONFIG_HPP
#define STOKES_CONFIG_HPP

#include <string>

#include "stokes/emission.hpp"
#include "stokes/model.hpp"
#include "stokes/thermometry.hpp"

namespace stokes {

// Fully validated run configuration. Defaults reproduce the 87Rb pencil-cell
// setup: lx = ly = 2 mm, lz = 30 mm, r0 = 2 mm, tau = 10 us.
struct RunConfig {
    struct Species {
        double mass_kg = rb87_mass_kg;
        double wavelength_m = rb87_d1_wavelength_m;
    } species;
    struct Cell {
        double lx_m = 2e-3;
        double ly_m = 2e-3;
        double lz_m = 30e-3;
    } cell;
    struct Pump {
        double waist_m = 2e-3;
        double tau_s = 10e-6;
    } pump;
    struct Scan {
        double phi_deg = 0.0;
        double theta_max_deg = 20.0;
        int points = default_scan_points;
    } scan;
    struct Quadrature {
        int nodes_per_axis = default_quad_nodes;
    } quadrature;
    struct Thermometry {
        double t_min_K = 1e-3;
        double t_max_K = 300.0;
        int n_points = 32;
        double rel_tol = 1e-3;
    } thermometry;

    AtomSpecies atom_species() const { return {species.mass_kg, species.wavelength_m}; }
    CloudGeometry cloud() const { return {cell.lx_m, cell.ly_m, cell.lz_m}; }
    PumpPulse pump_pulse() const { return {pump.waist_m, pump.tau_s}; }
    CalibrationSetup calibration_setup() const;
    ExperimentModel model_at(double temperature_K) const;
    ExperimentModel model_with_radius(double radius_A_m) const;
};

// Parses the line-based "section.key = value" format ('#' comments, blank
// lines ignored). Unknown keys are rejected with the line number; missing
// keys fall back to the defaults above. Throws ConfigParseError /
// ConfigValidationError.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Suffixed temperature literals: "100uK", "2.5mK", "1K", "300K", "50nK".
// A bare number is kelvin. Throws ConfigValidationError on bad input.
double parse_temperature_literal(const std::string& text);

}  // namespace stokes

#endif
