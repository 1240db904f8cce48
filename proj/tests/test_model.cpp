#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "stokes/errors.hpp"
#include "stokes/model.hpp"

using stokes::Complex;
using stokes::ExperimentModel;

namespace {

const stokes::AtomSpecies rb{};       // 87Rb defaults
const stokes::CloudGeometry cell{};   // 2 x 2 x 30 mm
const stokes::PumpPulse pulse_10ns{2e-3, 10e-9};

struct GParams {
    double c, q, A, w, L;
};

GParams random_g_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    GParams p;
    p.L = std::pow(10.0, -3.0 * u(rng));                    // 1e-3 .. 1
    p.A = p.L * std::pow(10.0, -6.0 + 8.0 * u(rng));        // A/L in [1e-6, 1e2]
    p.w = u(rng) < 0.3 ? stokes::infinite_beam
                       : p.L * std::pow(10.0, -1.0 + 2.0 * u(rng));
    p.c = (u(rng) - 0.5) * p.L;
    p.q = u(rng) < 0.15 ? 0.0 : std::pow(10.0, -2.0 + 7.0 * u(rng)) / p.L;  // qL up to 1e5
    return p;
}

}  // namespace

TEST_CASE("most probable speed against high-precision values") {
    CHECK(stokes::most_probable_speed(rb, 0.0) == 0.0);
    CHECK(stokes::most_probable_speed(rb, 300.0) ==
          doctest::Approx(239.58522114172346).epsilon(1e-12));
    CHECK(stokes::most_probable_speed(rb, 1e-4) ==
          doctest::Approx(0.13832459192003006).epsilon(1e-12));
    CHECK_THROWS_AS(stokes::most_probable_speed(rb, -1.0), stokes::NegativeTemperature);
}

TEST_CASE("motion radius") {
    CHECK(stokes::motion_radius(rb, 0.0, 1.0) == 0.0);
    CHECK(stokes::motion_radius(rb, 1e-4, 10e-9) ==
          doctest::Approx(1.3832459192003007e-9).epsilon(1e-12));
    CHECK(stokes::motion_radius(rb, 300.0, 10e-9) ==
          doctest::Approx(2.3958522114172347e-6).epsilon(1e-12));
}

TEST_CASE("model construction keeps A = v_a tau consistent") {
    const auto m = ExperimentModel::from_temperature(rb, cell, pulse_10ns, 1.0);
    const double expect = stokes::most_probable_speed(rb, 1.0) * 10e-9;
    CHECK(std::abs(m.motion().radius_A - expect) <= 1e-12 * expect);

    const auto m2 = ExperimentModel::from_motion_radius(rb, cell, pulse_10ns, 1e-6);
    CHECK(m2.motion().radius_A == 1e-6);
    const double back = stokes::most_probable_speed(rb, m2.motion().temperature) * 10e-9;
    CHECK(std::abs(back - 1e-6) <= 1e-12);

    CHECK_THROWS_AS(ExperimentModel::from_temperature(rb, cell, pulse_10ns, 1e-10),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExperimentModel::from_motion_radius(rb, cell, pulse_10ns, 0.0),
                    std::invalid_argument);
}

TEST_CASE("delta_k geometry") {
    const auto m = ExperimentModel::from_temperature(rb, cell, pulse_10ns, 1.0);
    const auto fwd = stokes::delta_k(m, {0.0, 0.0});
    CHECK(fwd[0] == 0.0);
    CHECK(fwd[1] == 0.0);
    CHECK(fwd[2] == 0.0);

    const double k0 = rb.k0();
    const auto side = stokes::delta_k(m, {stokes::pi / 2.0, 0.0});
    CHECK(side[0] == doctest::Approx(k0).epsilon(1e-12));
    CHECK(std::abs(side[1]) <= 1e-9);
    CHECK(side[2] == doctest::Approx(-k0).epsilon(1e-12));

    const auto one_deg = stokes::delta_k(m, {1.0 * stokes::deg_to_rad, 0.0});
    CHECK(one_deg[0] == doctest::Approx(137936.43072991294).epsilon(1e-12));
    CHECK(one_deg[2] == doctest::Approx(-1203.7529945088677).epsilon(1e-12));
}

TEST_CASE("windowed Gaussian Fourier factor: analytic anchors") {
    // unit-mass kernel fully inside the window
    const Complex g1 = stokes::windowed_gaussian_fourier(0.0, 0.0, 1e-3, stokes::infinite_beam, 1.0);
    CHECK(std::abs(g1 - Complex{1.0, 0.0}) <= 1e-12);

    // Gaussian product integral: sigma/A = 1/sqrt(2)
    const Complex g2 = stokes::windowed_gaussian_fourier(0.0, 0.0, 1.0, 1.0, 1e6);
    CHECK(g2.real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(g2.imag() == 0.0);
}

TEST_CASE("closed form matches the quadrature oracle on random parameters") {
    std::mt19937_64 rng(90210);
    for (int i = 0; i < 150; ++i) {
        const GParams p = random_g_params(rng);
        const Complex closed = stokes::windowed_gaussian_fourier(p.c, p.q, p.A, p.w, p.L);
        const Complex quad =
            stokes::windowed_gaussian_fourier_quadrature(p.c, p.q, p.A, p.w, p.L, 1e-13);
        const double tol = std::max(1e-8 * std::abs(quad), 1e-12);
        CHECK(std::abs(closed - quad) <= tol);
    }
}

TEST_CASE("A -> 0 recovers the fixed-atom factor") {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double L = std::pow(10.0, -3.0 * u(rng));
        const double w = u(rng) < 0.5 ? stokes::infinite_beam : L * (0.3 + 2.0 * u(rng));
        const double q = (u(rng) < 0.2 ? 0.0 : 30.0 * u(rng) / L);
        const double qscale = q > 0.0 ? 1.0 / q : L;
        const double A = 1e-6 * std::min({L, std::isfinite(w) ? w : L, qscale});
        const double c = (u(rng) - 0.5) * (L - 40.0 * A);  // >= 10 A from the edges
        const Complex g = stokes::windowed_gaussian_fourier(c, q, A, w, L);
        const double cw = std::isfinite(w) ? c / w : 0.0;
        const Complex target = std::exp(Complex(-cw * cw, -q * c));
        CHECK(std::abs(g - target) <= 1e-4 * std::abs(target));
    }
}

TEST_CASE("Hermitian frequency symmetry G(c,-q) = conj G(c,q)") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 200; ++i) {
        const GParams p = random_g_params(rng);
        const Complex gp = stokes::windowed_gaussian_fourier(p.c, p.q, p.A, p.w, p.L);
        const Complex gm = stokes::windowed_gaussian_fourier(p.c, -p.q, p.A, p.w, p.L);
        CHECK(std::abs(gm - std::conj(gp)) <= 1e-12 * std::abs(gp) + 1e-300);
    }
}

TEST_CASE("amplitude: forward emission from the cloud center is ~1") {
    const auto m = ExperimentModel::from_temperature(rb, cell, pulse_10ns, 1e-4);
    const Complex s = stokes::amplitude(m, {0.0, 0.0, 0.0}, {0.0, 0.0});
    CHECK(std::abs(s - Complex{1.0, 0.0}) <= 1e-6);
}

TEST_CASE("amplitude: x-mirror symmetry") {
    const auto m = ExperimentModel::from_temperature(rb, cell, pulse_10ns, 10.0);
    const stokes::StokesDirection d0{0.3, 0.0}, dpi{0.3, stokes::pi};
    const Complex a = stokes::amplitude(m, {4e-4, -2e-4, 5e-3}, d0);
    const Complex b = stokes::amplitude(m, {-4e-4, -2e-4, 5e-3}, dpi);
    CHECK(std::abs(std::abs(a) - std::abs(b)) <= 1e-12 * std::abs(a));
}

TEST_CASE("amplitude equals the product of three quadrature factors") {
    const auto m = ExperimentModel::from_temperature(rb, cell, pulse_10ns, 5.0);
    const stokes::StokesDirection dir{2.0 * stokes::deg_to_rad, 0.7};
    const stokes::Vec3 pos{3e-4, -6e-4, -8e-3};
    const auto dk = stokes::delta_k(m, dir);
    const double A = m.motion().radius_A;
    const Complex want =
        stokes::windowed_gaussian_fourier_quadrature(pos[0], dk[0], A, 2e-3, cell.lx, 1e-13) *
        stokes::windowed_gaussian_fourier_quadrature(pos[1], dk[1], A, 2e-3, cell.ly, 1e-13) *
        stokes::windowed_gaussian_fourier_quadrature(pos[2], dk[2], A, stokes::infinite_beam,
                                                     cell.lz, 1e-13);
    const Complex got = stokes::amplitude(m, pos, dir);
    CHECK(std::abs(got - want) <= 1e-8 * std::abs(want));

    CHECK_THROWS_AS(stokes::amplitude(m, {2e-3, 0.0, 0.0}, dir), std::invalid_argument);
}
