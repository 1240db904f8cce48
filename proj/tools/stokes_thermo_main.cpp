// stokes-thermo: angular Stokes-emission simulator and emission-cone
// thermometry for Lambda-configuration atomic ensembles.
//
// Subcommands: distribution | calibrate | invert | overlap
// Exit codes:
//   0 success
//   1 usage / internal error
//   2 configuration error (parse or validation)
//   3 flat emission regime (no finite cone width at this tau)
//   4 measured FWHM outside the calibration range
//   5 calibration file format or fingerprint error
//   6 numeric/domain error

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stokes/collective.hpp"
#include "stokes/config.hpp"
#include "stokes/emission.hpp"
#include "stokes/errors.hpp"
#include "stokes/thermometry.hpp"

namespace {

stokes::RunConfig load_config(const std::string& path) {
    if (path.empty()) return stokes::parse_config("");
    return stokes::parse_config_file(path);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw stokes::FormatError("cannot open output file '" + path + "'");
    return out;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> grid(n);
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < n; ++i) grid[i] = std::exp(la + (lb - la) * i / (n - 1));
    return grid;
}

int cmd_distribution(const std::string& config_path, const std::string& temp_literal,
                     const std::string& output) {
    const stokes::RunConfig cfg = load_config(config_path);
    const double t = stokes::parse_temperature_literal(temp_literal);
    const auto model = cfg.model_at(t);
    const auto dist = stokes::angular_scan(
        model, cfg.scan.phi_deg * stokes::deg_to_rad,
        cfg.scan.theta_max_deg * stokes::deg_to_rad, cfg.scan.points,
        cfg.quadrature.nodes_per_axis);
    auto out = open_output(output);
    stokes::write_csv(dist, out);
    return 0;
}

int cmd_calibrate(const std::string& config_path, const std::string& output) {
    const stokes::RunConfig cfg = load_config(config_path);
    const auto setup = cfg.calibration_setup();
    const auto grid = log_grid(cfg.thermometry.t_min_K, cfg.thermometry.t_max_K,
                               cfg.thermometry.n_points);
    std::vector<double> trimmed;
    const auto curve = stokes::calibrate_trimmed(setup, grid, &trimmed);
    for (double t : trimmed)
        std::fprintf(stderr, "warning: T=%g K is in the flat regime at tau=%g s; dropped\n",
                     t, setup.tau);
    auto out = open_output(output);
    stokes::save_curve(curve, out);
    return 0;
}

int cmd_invert(const std::string& config_path, const std::string& calibration_path,
               double fwhm_deg, bool refine, const std::string& output) {
    const stokes::RunConfig cfg = load_config(config_path);
    const auto setup = cfg.calibration_setup();
    const auto curve = stokes::load_curve(calibration_path, setup);
    const double f = fwhm_deg * stokes::deg_to_rad;
    double temperature = stokes::invert_temperature(curve, f);

    if (refine) {
        // bracket from the knots surrounding the measurement
        const auto& pts = curve.points;
        double t_lo = 0.0, t_hi = 0.0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            if (pts[i].fwhm_rad > f && f > pts[i + 1].fwhm_rad) {
                t_lo = pts[i].temperature_K;
                t_hi = pts[i + 1].temperature_K;
                break;
            }
        }
        if (t_lo > 0.0)
            temperature = stokes::refine_temperature(setup, f, t_lo, t_hi,
                                                     cfg.thermometry.rel_tol);
        // measurements landing exactly on a knot keep the knot temperature
    }

    char line[64];
    std::snprintf(line, sizeof line, "temperature_K=%.15g\n", temperature);
    std::fputs(line, stdout);
    if (!output.empty()) {
        auto out = open_output(output);
        out << line;
    }
    return 0;
}

int cmd_overlap(const std::string& config_path, const std::string& temp_literal,
                double motion_radius_m, const std::string& output) {
    const stokes::RunConfig cfg = load_config(config_path);
    const auto model = temp_literal.empty()
                           ? cfg.model_with_radius(motion_radius_m)
                           : cfg.model_at(stokes::parse_temperature_literal(temp_literal));
    const auto profile = stokes::weight_scan(
        model, cfg.scan.phi_deg * stokes::deg_to_rad,
        cfg.scan.theta_max_deg * stokes::deg_to_rad, cfg.scan.points,
        cfg.quadrature.nodes_per_axis);
    auto out = open_output(output);
    stokes::write_csv(profile, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stokes emission-cone simulator and atomic-ensemble thermometry"};
    app.require_subcommand(1);

    std::string config_path, output, temp_literal, calibration_path;
    double fwhm_deg = 0.0, motion_radius_m = 0.0;
    bool refine = false;

    auto* dist = app.add_subcommand("distribution",
                                    "Angular distribution of emitted Stokes photons (CSV)");
    dist->add_option("--config", config_path, "config file (section.key = value)");
    dist->add_option("--temperature", temp_literal, "ensemble temperature, e.g. 100uK, 1K")
        ->required();
    dist->add_option("--output", output, "output CSV path")->required();

    auto* cal = app.add_subcommand("calibrate",
                                   "Build a temperature vs FWHM calibration curve (CSV)");
    cal->add_option("--config", config_path, "config file");
    cal->add_option("--output", output, "calibration CSV path")->required();

    auto* inv = app.add_subcommand("invert", "Invert a measured FWHM into a temperature");
    inv->add_option("--config", config_path, "config file");
    inv->add_option("--calibration", calibration_path, "calibration CSV")->required();
    inv->add_option("--fwhm-deg", fwhm_deg, "measured cone FWHM in degrees")->required();
    inv->add_flag("--refine", refine, "refine the estimate against the forward model");
    inv->add_option("--output", output, "also write the report line here");

    auto* ovl = app.add_subcommand("overlap",
                                   "Symmetric collective-state weight vs angle (CSV)");
    ovl->add_option("--config", config_path, "config file");
    auto* ovl_t = ovl->add_option("--temperature", temp_literal, "ensemble temperature literal");
    auto* ovl_a = ovl->add_option("--motion-radius-m", motion_radius_m,
                                  "thermal motion radius A in meters");
    ovl_t->excludes(ovl_a);
    ovl_a->excludes(ovl_t);
    ovl->add_option("--output", output, "output CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (dist->parsed()) return cmd_distribution(config_path, temp_literal, output);
        if (cal->parsed()) return cmd_calibrate(config_path, output);
        if (inv->parsed())
            return cmd_invert(config_path, calibration_path, fwhm_deg, refine, output);
        if (ovl->parsed()) {
            if (temp_literal.empty() == (ovl_a->count() == 0)) {
                std::fprintf(stderr,
                             "overlap: exactly one of --temperature / --motion-radius-m\n");
                return 1;
            }
            return cmd_overlap(config_path, temp_literal, motion_radius_m, output);
        }
    } catch (const stokes::ConfigParseError& e) {
        std::fprintf(stderr, "ConfigParseError: %s\n", e.what());
        return 2;
    } catch (const stokes::ConfigValidationError& e) {
        std::fprintf(stderr, "ConfigValidationError: %s\n", e.what());
        return 2;
    } catch (const stokes::FlatRegime& e) {
        std::fprintf(stderr, "FlatRegime: %s\n", e.what());
        return 3;
    } catch (const stokes::OutOfCalibrationRange& e) {
        std::fprintf(stderr, "OutOfCalibrationRange: %s\n", e.what());
        return 4;
    } catch (const stokes::FingerprintMismatch& e) {
        std::fprintf(stderr, "FingerprintMismatch: %s\n", e.what());
        return 5;
    } catch (const stokes::FormatError& e) {
        std::fprintf(stderr, "FormatError: %s\n", e.what());
        return 5;
    } catch (const stokes::NonMonotoneCurve& e) {
        std::fprintf(stderr, "NonMonotoneCurve: %s\n", e.what());
        return 6;
    } catch (const stokes::Error& e) {
        std::fprintf(stderr, "Error: %s\n", e.what());
        return 6;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "InvalidArgument: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
