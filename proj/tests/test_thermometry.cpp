#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "stokes/errors.hpp"
#include "stokes/thermometry.hpp"

using stokes::CalibrationCurve;
using stokes::CalibrationSetup;

namespace {

// coarse but resolving settings keep the forward scans fast
CalibrationSetup fast_setup(double tau = 10e-6) {
    CalibrationSetup s;
    s.tau = tau;
    s.nodes_per_axis = 64;
    s.scan_points = 501;
    return s;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1.0));
    return g;
}

}  // namespace

TEST_CASE("calibration is strictly monotone over a 10 us grid") {
    const auto curve = stokes::calibrate(fast_setup(), log_grid(1e-6, 1e-2, 9));
    REQUIRE(curve.points.size() == 9);
    for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
        CHECK(curve.points[i].temperature_K < curve.points[i + 1].temperature_K);
        CHECK(curve.points[i].fwhm_rad > curve.points[i + 1].fwhm_rad);
    }
}

TEST_CASE("flat-regime grid temperatures are reported") {
    // at tau = 10 us anything below ~0.3 uK stays above half maximum everywhere
    auto grid = log_grid(1e-6, 1e-2, 8);
    grid.insert(grid.begin(), 1e-8);
    CHECK_THROWS_AS(stokes::calibrate(fast_setup(), grid), stokes::FlatRegime);
    try {
        stokes::calibrate(fast_setup(), grid);
    } catch (const stokes::FlatRegime& e) {
        CHECK(e.temperature_K == 1e-8);
    }
    std::vector<double> trimmed;
    const auto curve = stokes::calibrate_trimmed(fast_setup(), grid, &trimmed);
    CHECK(curve.points.size() == 8);
    REQUIRE(trimmed.size() == 1);
    CHECK(trimmed[0] == 1e-8);
}

TEST_CASE("tau ordering: at equal FWHM the longer pulse assigns a lower temperature") {
    const auto c10 = stokes::calibrate(fast_setup(10e-6), log_grid(1e-6, 1e-2, 8));
    const auto c100 = stokes::calibrate(fast_setup(100e-6), log_grid(1e-8, 1e-4, 8));
    const double f = 0.5 * (c10.points[3].fwhm_rad + c10.points[4].fwhm_rad);
    const double t10 = stokes::invert_temperature(c10, f);
    const double t100 = stokes::invert_temperature(c100, f);
    CHECK(t100 < t10);
    // exact collapse: FWHM depends on (T, tau) only through A = v_a(T) tau
    CHECK(t100 == doctest::Approx(t10 / 100.0).epsilon(0.02));
}

TEST_CASE("tau-scaling collapse of the forward model") {
    const double t = 3e-4;
    const double f10 = stokes::forward_fwhm(fast_setup(10e-6), t);
    const double f30 = stokes::forward_fwhm(fast_setup(30e-6), t * (10.0 / 30.0) * (10.0 / 30.0));
    CHECK(std::abs(f10 - f30) <= 1e-6 * f10);
}

TEST_CASE("inversion: knots are exact, interior within 1%") {
    const auto setup = fast_setup();
    const auto curve = stokes::calibrate(setup, log_grid(2e-6, 2e-2, 10));
    CHECK(stokes::invert_temperature(curve, curve.points[4].fwhm_rad) ==
          curve.points[4].temperature_K);

    for (double t_true : {7.7e-6, 3.1e-4, 2.3e-3}) {
        const double f = stokes::forward_fwhm(setup, t_true);
        const double t_est = stokes::invert_temperature(curve, f);
        CHECK(std::abs(t_est - t_true) <= 0.01 * t_true);
    }
}

TEST_CASE("inversion rejects out-of-range measurements") {
    const auto curve = stokes::calibrate(fast_setup(), log_grid(1e-6, 1e-2, 8));
    const double wide = curve.points.front().fwhm_rad * 1.5;
    const double narrow = curve.points.back().fwhm_rad * 0.5;
    CHECK_THROWS_AS(stokes::invert_temperature(curve, wide), stokes::OutOfCalibrationRange);
    CHECK_THROWS_AS(stokes::invert_temperature(curve, narrow), stokes::OutOfCalibrationRange);
    try {
        stokes::invert_temperature(curve, wide);
    } catch (const stokes::OutOfCalibrationRange& e) {
        CHECK(e.fwhm_min_rad == curve.points.back().fwhm_rad);
        CHECK(e.fwhm_max_rad == curve.points.front().fwhm_rad);
    }
}

TEST_CASE("refinement recovers a forward-generated target") {
    const auto setup = fast_setup();
    const double t_true = 2.4e-4;
    const double f = stokes::forward_fwhm(setup, t_true);
    const double t = stokes::refine_temperature(setup, f, 1e-4, 6e-4, 1e-3);
    CHECK(std::abs(t - t_true) <= 1e-3 * t_true);

    CHECK_THROWS_AS(stokes::refine_temperature(setup, f, 2e-4, 2e-4, 1e-3),
                    stokes::BracketInvalid);
    CHECK_THROWS_AS(stokes::refine_temperature(setup, f, 1e-3, 1e-2, 1e-3),
                    stokes::BracketInvalid);

    // nested tolerances agree
    const double loose = stokes::refine_temperature(setup, f, 1e-4, 6e-4, 1e-3);
    const double tight = stokes::refine_temperature(setup, f, 1e-4, 6e-4, 1e-6);
    CHECK(std::abs(loose - tight) <= 1e-3 * tight);
}

TEST_CASE("calibration file round-trips losslessly") {
    const auto setup = fast_setup();
    const auto curve = stokes::calibrate(setup, log_grid(1e-6, 1e-2, 8));

    std::ostringstream out;
    stokes::save_curve(curve, out);
    std::istringstream in(out.str());
    const auto back = stokes::load_curve(in, setup);

    CHECK(back.tau_s == curve.tau_s);
    CHECK(back.model_fingerprint == curve.model_fingerprint);
    REQUIRE(back.points.size() == curve.points.size());
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        CHECK(back.points[i].temperature_K == curve.points[i].temperature_K);
        CHECK(back.points[i].fwhm_rad ==
              doctest::Approx(curve.points[i].fwhm_rad).epsilon(1e-15));
    }
}

TEST_CASE("load rejects tampered and malformed files") {
    const auto setup = fast_setup();
    const auto curve = stokes::calibrate(setup, log_grid(1e-6, 1e-2, 8));
    std::ostringstream out;
    stokes::save_curve(curve, out);
    const std::string good = out.str();

    {
        // swap two data rows: non-monotone
        std::string bad = good;
        const auto p1 = bad.find('\n', bad.find("temperature_K"));
        const auto p2 = bad.find('\n', p1 + 1);
        const auto p3 = bad.find('\n', p2 + 1);
        const std::string row1 = bad.substr(p1 + 1, p2 - p1 - 1);
        const std::string row2 = bad.substr(p2 + 1, p3 - p2 - 1);
        bad.replace(p1 + 1, p3 - p1 - 1, row2 + "\n" + row1);
        std::istringstream in(bad);
        CHECK_THROWS_AS(stokes::load_curve(in), stokes::NonMonotoneCurve);
    }
    {
        // drop the column header
        std::string bad = good;
        const auto pos = bad.find("temperature_K,fwhm_deg\n");
        bad.erase(pos, std::string("temperature_K,fwhm_deg\n").size());
        std::istringstream in(bad);
        CHECK_THROWS_AS(stokes::load_curve(in), stokes::FormatError);
    }
    {
        // cross-check against a different model
        auto other = setup;
        other.cell.lz = 31e-3;
        std::istringstream in(good);
        CHECK_THROWS_AS(stokes::load_curve(in, other), stokes::FingerprintMismatch);
    }
}

TEST_CASE("identical inputs give bit-identical curves") {
    const auto a = stokes::calibrate(fast_setup(), log_grid(1e-6, 1e-2, 8));
    const auto b = stokes::calibrate(fast_setup(), log_grid(1e-6, 1e-2, 8));
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].temperature_K == b.points[i].temperature_K);
        CHECK(a.points[i].fwhm_rad == b.points[i].fwhm_rad);
    }
}
