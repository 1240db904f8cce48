#include "stokes/config.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "stokes/errors.hpp"

namespace stokes {

CalibrationSetup RunConfig::calibration_setup() const {
    return {atom_species(), cloud(), pump.waist_m, pump.tau_s,
            quadrature.nodes_per_axis, scan.points};
}

ExperimentModel RunConfig::model_at(double temperature_K) const {
    return ExperimentModel::from_temperature(atom_species(), cloud(), pump_pulse(),
                                             temperature_K);
}

ExperimentModel RunConfig::model_with_radius(double radius_A_m) const {
    return ExperimentModel::from_motion_radius(atom_species(), cloud(), pump_pulse(),
                                               radius_A_m);
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, std::size_t lineno) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigParseError("line " + std::to_string(lineno) + ": expected a number, got '" +
                               v + "'", lineno);
    return x;
}

int parse_int(const std::string& v, std::size_t lineno) {
    char* end = nullptr;
    const long x = std::strtol(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        throw ConfigParseError("line " + std::to_string(lineno) + ": expected an integer, got '" +
                               v + "'", lineno);
    return static_cast<int>(x);
}

void validate(const RunConfig& cfg) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ConfigValidationError(what);
    };
    require(cfg.species.mass_kg > 0.0, "species.mass_kg must be > 0");
    require(cfg.species.wavelength_m > 0.0, "species.wavelength_m must be > 0");
    require(cfg.cell.lx_m > 0.0, "cell.lx_m must be > 0");
    require(cfg.cell.ly_m > 0.0, "cell.ly_m must be > 0");
    require(cfg.cell.lz_m > 0.0, "cell.lz_m must be > 0");
    require(cfg.pump.waist_m > 0.0, "pump.waist_m must be > 0");
    require(cfg.pump.tau_s > 0.0, "pump.tau_s must be > 0");
    require(cfg.scan.phi_deg >= 0.0 && cfg.scan.phi_deg < 360.0,
            "scan.phi_deg must be in [0, 360)");
    require(cfg.scan.theta_max_deg > 0.0 && cfg.scan.theta_max_deg <= 180.0,
            "scan.theta_max_deg must be in (0, 180]");
    require(cfg.scan.points >= 3, "scan.points must be >= 3");
    require(cfg.quadrature.nodes_per_axis >= 8, "quadrature.nodes_per_axis must be >= 8");
    require(cfg.thermometry.t_min_K > 0.0, "thermometry.t_min_K must be > 0");
    require(cfg.thermometry.t_max_K > cfg.thermometry.t_min_K,
            "thermometry.t_min_K must be below t_max_K");
    require(cfg.thermometry.n_points >= 8, "thermometry.n_points must be >= 8");
    require(cfg.thermometry.rel_tol > 0.0, "thermometry.rel_tol must be > 0");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    const std::map<std::string, std::function<void(const std::string&, std::size_t)>>
        setters{
            {"species.mass_kg", [&](const std::string& v, std::size_t n) { cfg.species.mass_kg = parse_double(v, n); }},
            {"species.wavelength_m", [&](const std::string& v, std::size_t n) { cfg.species.wavelength_m = parse_double(v, n); }},
            {"cell.lx_m", [&](const std::string& v, std::size_t n) { cfg.cell.lx_m = parse_double(v, n); }},
            {"cell.ly_m", [&](const std::string& v, std::size_t n) { cfg.cell.ly_m = parse_double(v, n); }},
            {"cell.lz_m", [&](const std::string& v, std::size_t n) { cfg.cell.lz_m = parse_double(v, n); }},
            {"pump.waist_m", [&](const std::string& v, std::size_t n) { cfg.pump.waist_m = parse_double(v, n); }},
            {"pump.tau_s", [&](const std::string& v, std::size_t n) { cfg.pump.tau_s = parse_double(v, n); }},
            {"scan.phi_deg", [&](const std::string& v, std::size_t n) { cfg.scan.phi_deg = parse_double(v, n); }},
            {"scan.theta_max_deg", [&](const std::string& v, std::size_t n) { cfg.scan.theta_max_deg = parse_double(v, n); }},
            {"scan.points", [&](const std::string& v, std::size_t n) { cfg.scan.points = parse_int(v, n); }},
            {"quadrature.nodes_per_axis", [&](const std::string& v, std::size_t n) { cfg.quadrature.nodes_per_axis = parse_int(v, n); }},
            {"thermometry.t_min_K", [&](const std::string& v, std::size_t n) { cfg.thermometry.t_min_K = parse_double(v, n); }},
            {"thermometry.t_max_K", [&](const std::string& v, std::size_t n) { cfg.thermometry.t_max_K = parse_double(v, n); }},
            {"thermometry.n_points", [&](const std::string& v, std::size_t n) { cfg.thermometry.n_points = parse_int(v, n); }},
            {"thermometry.rel_tol", [&](const std::string& v, std::size_t n) { cfg.thermometry.rel_tol = parse_double(v, n); }},
        };

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigParseError(
                "line " + std::to_string(lineno) + ": expected 'section.key = value'", lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty())
            throw ConfigParseError("line " + std::to_string(lineno) + ": empty value", lineno);
        const auto it = setters.find(key);
        if (it == setters.end())
            throw ConfigParseError(
                "line " + std::to_string(lineno) + ": unknown key '" + key + "'", lineno);
        it->second(value, lineno);
    }
    validate(cfg);
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigParseError("cannot open config file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

double parse_temperature_literal(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) throw ConfigValidationError("empty temperature literal");
    double factor = 1.0;
    std::string num = s;
    if (s.size() >= 2 && (s.ends_with("nK") || s.ends_with("uK") || s.ends_with("mK"))) {
        const char prefix = s[s.size() - 2];
        factor = prefix == 'n' ? 1e-9 : prefix == 'u' ? 1e-6 : 1e-3;
        num = trim(s.substr(0, s.size() - 2));
    } else if (s.ends_with("K")) {
        num = trim(s.substr(0, s.size() - 1));
    }
    char* end = nullptr;
    const double v = std::strtod(num.c_str(), &end);
    if (end == num.c_str() || *end != '\0')
        throw ConfigValidationError("bad temperature literal '" + s + "'");
    const double kelvin = v * factor;
    if (!(kelvin >= 0.0) || !std::isfinite(kelvin))
        throw ConfigValidationError("temperature literal must be a finite value >= 0");
    return kelvin;
}

}  // namespace stokes
