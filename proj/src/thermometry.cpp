#include "stokes/thermometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "stokes/errors.hpp"

namespace stokes {

namespace {

constexpr const char* schema_id = "stokes-thermo-cal-v1";

void append_field(std::string& s, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g|", v);
    s += buf;
}

ExperimentModel model_at(const CalibrationSetup& setup, double temperature_K) {
    return ExperimentModel::from_temperature(
        setup.species, setup.cell, PumpPulse{setup.waist_r0, setup.tau}, temperature_K);
}

void validate_curve(const CalibrationCurve& curve) {
    if (curve.points.size() < 8)
        throw FormatError("calibration curve needs at least 8 points");
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
        if (!(curve.points[i].temperature_K < curve.points[i + 1].temperature_K) ||
            !(curve.points[i].fwhm_rad > curve.points[i + 1].fwhm_rad))
            bad.push_back(i);
    }
    if (!bad.empty())
        throw NonMonotoneCurve("calibration curve is not strictly monotone", bad);
}

// Fritsch-Butland limited slopes for a monotone cubic Hermite interpolant,
// with the usual shape-preserving three-point boundary formula.
std::vector<double> monotone_slopes(const std::vector<double>& x,
                                    const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> h(n - 1), d(n - 1), g(n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k] = x[k + 1] - x[k];
        d[k] = (y[k + 1] - y[k]) / h[k];
    }
    auto boundary = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) return 0.0;
        if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0)) return 3.0 * d0;
        return s;
    };
    g[0] = boundary(h[0], h[1], d[0], d[1]);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double prod = d[k] * d[k - 1];
        if (prod > 0.0) {
            const double a = (h[k - 1] + 2.0 * h[k]) / (3.0 * (h[k - 1] + h[k]));
            g[k] = prod / (a * d[k] + (1.0 - a) * d[k - 1]);
        } else {
            g[k] = 0.0;
        }
    }
    g[n - 1] = boundary(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    return g;
}

double hermite(double t, double h, double y0, double y1, double g0, double g1) {
    auto h00 = [](double s) { return (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s); };
    auto h10 = [](double s) { return s * (1.0 - s) * (1.0 - s); };
    return y0 * h00(t) + h * g0 * h10(t) + y1 * h00(1.0 - t) - h * g1 * h10(1.0 - t);
}

}  // namespace

std::string model_fingerprint(const CalibrationSetup& setup) {
    std::string canon;
    append_field(canon, setup.species.mass_kg);
    append_field(canon, setup.species.transition_wavelength_m);
    append_field(canon, setup.cell.lx);
    append_field(canon, setup.cell.ly);
    append_field(canon, setup.cell.lz);
    append_field(canon, setup.waist_r0);
    append_field(canon, setup.tau);
    std::uint64_t hash = 1469598103934665603ull;  // FNV-1a
    for (unsigned char ch : canon) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
    return hex;
}

double forward_fwhm(const CalibrationSetup& setup, double temperature_K) {
    return default_scan_fwhm(model_at(setup, temperature_K), setup.nodes_per_axis,
                             setup.scan_points);
}

std::vector<double> default_t_grid() {
    std::vector<double> grid(32);
    const double lo = std::log(1e-3), hi = std::log(300.0);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = std::exp(lo + (hi - lo) * double(i) / (grid.size() - 1));
    return grid;
}

namespace {

CalibrationCurve calibrate_impl(const CalibrationSetup& setup,
                                const std::vector<double>& t_grid, bool trim,
                                std::vector<double>* trimmed) {
    if (t_grid.size() < 8)
        throw std::invalid_argument("calibrate: need at least 8 grid temperatures");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > 0.0))
            throw std::invalid_argument("calibrate: grid temperatures must be > 0");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("calibrate: grid must be strictly increasing");
    }

    CalibrationCurve curve;
    curve.tau_s = setup.tau;
    curve.model_fingerprint = model_fingerprint(setup);
    for (double t : t_grid) {
        try {
            curve.points.push_back({t, forward_fwhm(setup, t)});
        } catch (const NoHalfCrossing&) {
            if (!trim) {
                char msg[128];
                std::snprintf(msg, sizeof msg,
                              "calibrate: flat emission (no finite FWHM) at T=%g K", t);
                throw FlatRegime(msg, t);
            }
            if (trimmed) trimmed->push_back(t);
        }
    }
    if (curve.points.size() < 8) {
        const double t_flat = trimmed && !trimmed->empty() ? trimmed->back() : t_grid.front();
        throw FlatRegime("calibrate: too few finite-FWHM temperatures in the grid", t_flat);
    }
    validate_curve(curve);
    return curve;
}

}  // namespace

CalibrationCurve calibrate(const CalibrationSetup& setup,
                           const std::vector<double>& t_grid) {
    return calibrate_impl(setup, t_grid, false, nullptr);
}

CalibrationCurve calibrate_trimmed(const CalibrationSetup& setup,
                                   const std::vector<double>& t_grid,
                                   std::vector<double>* trimmed) {
    return calibrate_impl(setup, t_grid, true, trimmed);
}

double invert_temperature(const CalibrationCurve& curve, double fwhm_measured_rad) {
    validate_curve(curve);
    const std::size_t n = curve.points.size();
    // log T against log FWHM (nearly affine: T ~ FWHM^-2 on the cold side),
    // ascending-FWHM view: reversed point order (warmest first)
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = std::log(curve.points[n - 1 - i].fwhm_rad);
        ys[i] = std::log(curve.points[n - 1 - i].temperature_K);
    }
    const double fmin = curve.points[n - 1].fwhm_rad;
    const double fmax = curve.points[0].fwhm_rad;
    if (fwhm_measured_rad < fmin || fwhm_measured_rad > fmax) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "invert_temperature: FWHM %.6g rad outside calibrated range "
                      "[%.6g, %.6g] rad",
                      fwhm_measured_rad, fmin, fmax);
        throw OutOfCalibrationRange(msg, fmin, fmax);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (fwhm_measured_rad == curve.points[i].fwhm_rad)
            return curve.points[i].temperature_K;

    const double x = std::log(fwhm_measured_rad);
    const std::vector<double> g = monotone_slopes(xs, ys);
    std::size_t k = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin() - 1;
    k = std::min(k, n - 2);
    const double h = xs[k + 1] - xs[k];
    const double t = (x - xs[k]) / h;
    return std::exp(hermite(t, h, ys[k], ys[k + 1], g[k], g[k + 1]));
}

double refine_temperature(const CalibrationSetup& setup, double fwhm_measured_rad,
                          double t_lo, double t_hi, double rel_tol) {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("refine_temperature: rel_tol must be > 0");
    if (!(t_lo > 0.0) || !(t_hi > t_lo))
        throw BracketInvalid("refine_temperature: need 0 < T_lo < T_hi");
    double f_lo, f_hi;
    try {
        f_lo = forward_fwhm(setup, t_lo);
        f_hi = forward_fwhm(setup, t_hi);
    } catch (const NoHalfCrossing&) {
        throw BracketInvalid("refine_temperature: bracket endpoint in the flat regime");
    }
    if (!(f_lo > fwhm_measured_rad && f_hi < fwhm_measured_rad))
        throw BracketInvalid(
            "refine_temperature: bracket does not straddle the measured FWHM");

    double lo = t_lo, hi = t_hi;
    while ((hi - lo) / (0.5 * (hi + lo)) > rel_tol) {
        const double mid = std::sqrt(lo * hi);
        if (forward_fwhm(setup, mid) > fwhm_measured_rad)
            lo = mid;
        else
            hi = mid;
    }
    return std::sqrt(lo * hi);
}

void save_curve(const CalibrationCurve& curve, std::ostream& out) {
    char buf[96];
    out << "# fingerprint=" << curve.model_fingerprint << "\n";
    std::snprintf(buf, sizeof buf, "# tau_s=%.17g\n", curve.tau_s);
    out << buf;
    out << "# schema=" << schema_id << "\n";
    out << "temperature_K,fwhm_deg\n";
    for (const auto& p : curve.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.temperature_K,
                      p.fwhm_rad * rad_to_deg);
        out << buf;
    }
}

void save_curve(const CalibrationCurve& curve, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("save_curve: cannot open '" + path + "'");
    save_curve(curve, out);
    if (!out.good()) throw FormatError("save_curve: write failed for '" + path + "'");
}

CalibrationCurve load_curve(std::istream& in,
                            const std::optional<CalibrationSetup>& expect) {
    CalibrationCurve curve;
    bool have_fp = false, have_tau = false, have_schema = false, have_header = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string body = line.substr(1);
            const auto eq = body.find('=');
            if (eq == std::string::npos) throw FormatError("load_curve: malformed comment header");
            std::string key = body.substr(0, eq);
            key.erase(0, key.find_first_not_of(' '));
            const std::string value = body.substr(eq + 1);
            if (key == "fingerprint") {
                curve.model_fingerprint = value;
                have_fp = true;
            } else if (key == "tau_s") {
                char* end = nullptr;
                curve.tau_s = std::strtod(value.c_str(), &end);
                if (end == value.c_str() || *end != '\0')
                    throw FormatError("load_curve: bad tau_s value");
                have_tau = true;
            } else if (key == "schema") {
                if (value != schema_id)
                    throw FormatError("load_curve: unsupported schema '" + value + "'");
                have_schema = true;
            } else {
                throw FormatError("load_curve: unknown header key '" + key + "'");
            }
            continue;
        }
        if (!have_header) {
            if (line != "temperature_K,fwhm_deg")
                throw FormatError("load_curve: missing 'temperature_K,fwhm_deg' header row");
            have_header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw FormatError("load_curve: malformed data row at line " + std::to_string(lineno));
        char* end = nullptr;
        const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
        const double t = std::strtod(a.c_str(), &end);
        if (end == a.c_str() || *end != '\0')
            throw FormatError("load_curve: bad temperature at line " + std::to_string(lineno));
        const double f = std::strtod(b.c_str(), &end);
        if (end == b.c_str() || *end != '\0')
            throw FormatError("load_curve: bad FWHM at line " + std::to_string(lineno));
        curve.points.push_back({t, f * deg_to_rad});
    }
    if (!have_fp || !have_tau || !have_schema || !have_header)
        throw FormatError("load_curve: incomplete header block");
    validate_curve(curve);
    if (expect) {
        const std::string fp = model_fingerprint(*expect);
        if (fp != curve.model_fingerprint || expect->tau != curve.tau_s)
            throw FingerprintMismatch(
                "load_curve: calibration was built for a different model (fingerprint " +
                curve.model_fingerprint + ", expected " + fp + ")");
    }
    return curve;
}

CalibrationCurve load_curve(const std::string& path,
                            const std::optional<CalibrationSetup>& expect) {
    std::ifstream in(path);
    if (!in) throw FormatError("load_curve: cannot open '" + path + "'");
    return load_curve(in, expect);
}

}  // namespace stokes
