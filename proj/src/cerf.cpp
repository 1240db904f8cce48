#include "stokes/cerf.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "stokes/constants.hpp"
#include "stokes/errors.hpp"

namespace stokes {
namespace {

constexpr double exp_overflow = 709.78;  // log(DBL_MAX)
constexpr double big = std::numeric_limits<double>::max() / 4.0;

// exp(-z^2) with the magnitude clamped to double range.
Complex exp_minus_zsq(Complex z) {
    const double x = z.real(), y = z.imag();
    const double m = (y - x) * (y + x);  // y^2 - x^2 without cancellation blowup
    const double phi = -2.0 * x * y;
    const double mag = m > exp_overflow ? big : std::exp(m);
    return {mag * std::cos(phi), mag * std::sin(phi)};
}

// Laplace continued fraction, accurate for |z| >= 9 in the upper half-plane.
Complex faddeeva_cf(Complex z, double rho2) {
    int n;
    if (rho2 < 300.0)      n = 20;
    else if (rho2 < 1e3)   n = 14;
    else if (rho2 < 1e4)   n = 10;
    else if (rho2 < 1e5)   n = 8;
    else if (rho2 < 1e7)   n = 6;
    else if (rho2 < 1e12)  n = 4;
    else                   n = 3;
    Complex r = 0.0;
    for (int k = n; k >= 1; --k) r = (0.5 * k) / (z - r);
    return Complex(0.0, 1.0 / sqrt_pi) / (z - r);
}

// Sampled-Hilbert-transform evaluation for moderate |z|, Im(z) >= 0:
//   w(z) = (ih/pi) sum_n exp(-t_n^2)/(z - t_n)  - pole correction,
// where the correction resums the aliased images of the pole at t = z
// (geometric series in E = exp(2*pi*i*z/h)). Of the two interleaved node
// grids, the one farther from Re(z) is used, which keeps every denominator
// and the 1 -/+ E factor away from zero.
constexpr double samp_h = 0.4;
constexpr int samp_n = 19;  // nodes cover |t| <= 7.6

struct SampGrid {
    std::array<double, samp_n + 1> t;     // nodes 0..n (integer) or half-offset
    std::array<double, samp_n + 1> emt2;  // exp(-t^2)
};

const SampGrid& int_grid() {
    static const SampGrid g = [] {
        SampGrid s{};
        for (int n = 0; n <= samp_n; ++n) {
            s.t[n] = n * samp_h;
            s.emt2[n] = std::exp(-s.t[n] * s.t[n]);
        }
        return s;
    }();
    return g;
}

const SampGrid& half_grid() {
    static const SampGrid g = [] {
        SampGrid s{};
        for (int n = 0; n <= samp_n; ++n) {
            s.t[n] = (n + 0.5) * samp_h;
            s.emt2[n] = std::exp(-s.t[n] * s.t[n]);
        }
        return s;
    }();
    return g;
}

Complex faddeeva_sampled(Complex z) {
    const double x = z.real();
    const double frac = x / samp_h - std::round(x / samp_h);
    const bool use_int = std::abs(frac) >= 0.25;

    Complex sum = 0.0;
    if (use_int) {
        const SampGrid& g = int_grid();
        // symmetric pairs first so conjugate symmetries cancel exactly
        for (int n = samp_n; n >= 1; --n)
            sum += g.emt2[n] * (1.0 / (z - g.t[n]) + 1.0 / (z + g.t[n]));
        sum += 1.0 / z;
    } else {
        const SampGrid& g = half_grid();
        for (int n = samp_n; n >= 0; --n)
            sum += g.emt2[n] * (1.0 / (z - g.t[n]) + 1.0 / (z + g.t[n]));
    }
    const Complex T = Complex(0.0, samp_h / pi) * sum;

    // E = exp(2*pi*i*z/h); |E| <= 1 since Im(z) >= 0
    const double ph = two_pi * x / samp_h;
    const double decay = std::exp(-two_pi * z.imag() / samp_h);
    const Complex E(decay * std::cos(ph), decay * std::sin(ph));
    const Complex ez2 = exp_minus_zsq(z);
    if (use_int) return T - 2.0 * ez2 * (E / (1.0 - E));
    return T + 2.0 * ez2 * (E / (1.0 + E));
}

// w(z) for Im(z) >= 0.
Complex faddeeva_upper(Complex z) {
    const double rho2 = z.real() * z.real() + z.imag() * z.imag();
    if (rho2 >= 81.0) return faddeeva_cf(z, rho2);
    return faddeeva_sampled(z);
}

Complex erf_maclaurin(Complex z) {
    const Complex z2 = z * z;
    Complex term = z;
    Complex sum = z;
    for (int n = 1; n <= 64; ++n) {
        term *= -z2 / static_cast<double>(n);
        const Complex add = term / static_cast<double>(2 * n + 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return (2.0 / sqrt_pi) * sum;
}

// True when erf(v) is +-1 to ~1e-26 absolute and the general path would
// just churn through negligible exponentials.
bool erf_saturated(Complex v) {
    const double re = std::abs(v.real()), im = std::abs(v.imag());
    return re >= 30.0 && re * re - im * im >= 60.0;
}

// exp(e) where Re(e) may be deeply negative (underflow to 0 is fine).
// Throws when the factor alone exceeds double range.
Complex checked_exp(Complex e, const char* what) {
    if (e.real() > exp_overflow) throw OverflowUnrepresentable(what);
    if (e.real() < -746.0) return 0.0;
    const double mag = std::exp(e.real());
    return {mag * std::cos(e.imag()), mag * std::sin(e.imag())};
}

// -------- compensated evaluation of exp(Lhi + Llo - v^2) ------------------
// Lhi can sit near +(Im v)^2 with both huge; plain double subtraction would
// wipe out the small remainder that the exponential actually depends on.

struct TwoFold {
    double hi, lo;
};

TwoFold two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

TwoFold two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

TwoFold tf_add(TwoFold a, TwoFold b) {
    TwoFold s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    const double hi = s.hi + s.lo;
    return {hi, s.lo - (hi - s.hi)};
}

TwoFold tf_neg(TwoFold a) { return {-a.hi, -a.lo}; }

// exp(L - v^2) with L given as hi+lo, products error-free.
Complex checked_exp_pair(Complex lhi, Complex llo, Complex v, const char* what) {
    const TwoFold vr2 = two_prod(v.real(), v.real());
    const TwoFold vi2 = two_prod(v.imag(), v.imag());
    const TwoFold vri = two_prod(v.real(), v.imag());
    TwoFold re = tf_add({lhi.real(), llo.real()}, tf_neg(vr2));
    re = tf_add(re, vi2);
    TwoFold im = tf_add({lhi.imag(), llo.imag()}, {-2.0 * vri.hi, -2.0 * vri.lo});
    if (re.hi > exp_overflow) throw OverflowUnrepresentable(what);
    if (re.hi < -746.0) return 0.0;
    const double mag = std::exp(re.hi) * (1.0 + re.lo);
    const double c = std::cos(im.hi), s = std::sin(im.hi);
    // first-order rotation by the phase residual
    return {mag * (c - s * im.lo), mag * (s + c * im.lo)};
}

}  // namespace

Complex faddeeva(Complex z) {
    if (z.imag() >= 0.0) return faddeeva_upper(z);
    // w(z) = 2 exp(-z^2) - w(-z); exp_minus_zsq handles the growing factor
    return 2.0 * exp_minus_zsq(z) - faddeeva_upper(-z);
}

Complex erf_complex(Complex z) {
    const double rho2 = z.real() * z.real() + z.imag() * z.imag();
    if (rho2 <= 4.0) return erf_maclaurin(z);
    const double s = z.real() >= 0.0 ? 1.0 : -1.0;
    const Complex u = s * z;
    // erf(u) = 1 - exp(-u^2) w(iu), Im(iu) = Re(u) >= 0
    const Complex x = exp_minus_zsq(u) * faddeeva_upper(Complex(-u.imag(), u.real()));
    return s * (1.0 - x);
}

Complex pair_erf_diff(Complex a, Complex b, Complex log_prefactor_hi,
                      Complex log_prefactor_lo) {
    if (a == b) return 0.0;
    const double sa = a.real() >= 0.0 ? 1.0 : -1.0;
    const double sb = b.real() >= 0.0 ? 1.0 : -1.0;

    if (erf_saturated(a) && erf_saturated(b)) {
        if (sa == sb) return 0.0;
        return (sa - sb) *
               checked_exp(log_prefactor_hi + log_prefactor_lo,
                           "pair_erf_diff: exp(log_prefactor) overflows");
    }

    Complex result = 0.0;
    if (sa != sb)
        result = (sa - sb) * checked_exp(log_prefactor_hi + log_prefactor_lo,
                                         "pair_erf_diff: exp(log_prefactor) overflows");

    const Complex ua = sa * a;
    const Complex ub = sb * b;
    const Complex xa = checked_exp_pair(log_prefactor_hi, log_prefactor_lo, a,
                                        "pair_erf_diff: product overflows (a term)") *
                       faddeeva_upper(Complex(-ua.imag(), ua.real()));
    const Complex xb = checked_exp_pair(log_prefactor_hi, log_prefactor_lo, b,
                                        "pair_erf_diff: product overflows (b term)") *
                       faddeeva_upper(Complex(-ub.imag(), ub.real()));
    return result - sa * xa + sb * xb;
}

Complex pair_erf_diff(Complex a, Complex b, Complex log_prefactor) {
    return pair_erf_diff(a, b, log_prefactor, Complex{0.0, 0.0});
}

}  // namespace stokes
