#ifndef STOKES_QUADRATURE_HPP
#define STOKES_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace stokes {

// Gauss-Legendre rule on [-1,1]; nodes/weights built by Newton iteration.
class GaussLegendre {
  public:
    explicit GaussLegendre(int order);

    int order() const { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    // Integrate f over [a, b].
    template <typename F>
    auto integrate(F&& f, double a, double b) const {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        decltype(f(mid)) acc{};
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            acc += weights_[i] * f(mid + half * nodes_[i]);
        return acc * half;
    }

  private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

// Process-wide cache of rules by order (they are expensive to rebuild in
// per-angle loops). Thread-safe.
const GaussLegendre& shared_rule(int order);

// Globally adaptive complex-valued quadrature over [a, b]: bisects the
// worst interval (error estimated by comparing a 12-point rule with its two
// halves) until the summed estimate is under abs_tol. Breakpoints seed the
// initial subdivision so narrow kernels are not missed. noise_scale is the
// integrand's relative evaluation noise in units of machine epsilon
// (oscillatory integrands evaluated at rounded positions carry |d ln f/dx|
// * |x| * eps); error estimates below that floor count as converged.
// Throws QuadratureNonConvergence at the interval limit.
std::complex<double> integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, const std::vector<double>& breakpoints = {},
    int max_intervals = 200000, double noise_scale = 1.0);

}  // namespace stokes

#endif
