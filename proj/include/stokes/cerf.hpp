#ifndef STOKES_CERF_HPP
#define STOKES_CERF_HPP

#include <complex>

namespace stokes {

using Complex = std::complex<double>;

// Faddeeva function w(z) = exp(-z^2) * erfc(-iz).
//
// Relative accuracy is ~1e-13 for Im(z) >= 0; the lower half-plane goes
// through the reflection w(-z) = 2*exp(-z^2) - w(z). Total on finite inputs:
// results whose true magnitude exceeds double range are clamped to finite
// saturation values instead of producing Inf/NaN.
Complex faddeeva(Complex z);

// erf(z) for complex argument, via erf(z) = 1 - exp(-z^2) w(iz) and odd
// symmetry, with a Maclaurin branch near the origin. Relative accuracy
// ~1e-13 for |z| <= 20.
Complex erf_complex(Complex z);

// exp(log_prefactor) * (erf(a) - erf(b)), evaluated jointly so that a very
// negative Gaussian log-prefactor cancels the erf growth before either
// factor overflows. Throws OverflowUnrepresentable when the true product
// magnitude does not fit in double range.
Complex pair_erf_diff(Complex a, Complex b, Complex log_prefactor);

// Two-part prefactor variant: the effective log-prefactor is hi + lo with
// |lo| << |hi|. The combination log_prefactor - a^2 is carried out with
// error-free products, so prefactors near -(Im a)^2 (the windowed-Gaussian
// case, where the huge parts cancel analytically) keep full precision.
Complex pair_erf_diff(Complex a, Complex b, Complex log_prefactor_hi,
                      Complex log_prefactor_lo);

}  // namespace stokes

#endif
