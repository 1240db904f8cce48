// Internal: 1-D mean-position integrals over one cell edge, shared by the
// emission and collective modules.
//
// |G(c)|^2 develops O(A)-wide transition layers at the cell boundary; plain
// fixed-node Gauss-Legendre samples them erratically once the layer falls
// between nodes. When the layers are narrow the node budget is split into
// two dedicated edge panels plus the interior, which keeps doubling the
// order convergent at machine precision for every motion radius.
#ifndef STOKES_SRC_AXIS_INTEGRALS_HPP
#define STOKES_SRC_AXIS_INTEGRALS_HPP

#include <cmath>
#include <complex>

#include "stokes/model.hpp"
#include "stokes/quadrature.hpp"

namespace stokes::detail {

struct AxisLayout {
    // spans [x0,x1] with node counts; at most 3 used
    double edges[4];
    int orders[3];
    int count;
};

inline AxisLayout axis_layout(double motion_A, double beam_w, double L, int order) {
    const double ratio = motion_A / beam_w;  // 0 for infinite beam
    const double beta = 1.0 / (1.0 + ratio * ratio);
    const double layer = motion_A / std::sqrt(beta);  // c-scale of the boundary layer
    AxisLayout lay{};
    const double margin = 14.0 * layer;
    const int n_edge = std::max(24, order / 8);
    if (2.0 * margin < 0.5 * L && order >= 4 * n_edge) {
        lay.count = 3;
        lay.edges[0] = -0.5 * L;
        lay.edges[1] = -0.5 * L + margin;
        lay.edges[2] = 0.5 * L - margin;
        lay.edges[3] = 0.5 * L;
        lay.orders[0] = n_edge;
        lay.orders[1] = order - 2 * n_edge;
        lay.orders[2] = n_edge;
    } else {
        lay.count = 1;
        lay.edges[0] = -0.5 * L;
        lay.edges[1] = 0.5 * L;
        lay.orders[0] = order;
    }
    return lay;
}

template <typename F>
auto integrate_axis(F&& f, const AxisLayout& lay) {
    decltype(f(0.0)) total{};
    for (int s = 0; s < lay.count; ++s)
        total += shared_rule(lay.orders[s]).integrate(f, lay.edges[s], lay.edges[s + 1]);
    return total;
}

// Int |G(c, q)|^2 dc over the cell edge.
inline double axis_power_integral(double q, double motion_A, double beam_w, double L,
                                  int order) {
    const AxisLayout lay = axis_layout(motion_A, beam_w, L, order);
    return integrate_axis(
        [&](double c) {
            return std::norm(windowed_gaussian_fourier(c, q, motion_A, beam_w, L));
        },
        lay);
}

// Int G(c, q) dc over the cell edge (complex).
inline Complex axis_coherent_integral(double q, double motion_A, double beam_w, double L,
                                      int order) {
    const AxisLayout lay = axis_layout(motion_A, beam_w, L, order);
    return integrate_axis(
        [&](double c) { return windowed_gaussian_fourier(c, q, motion_A, beam_w, L); },
        lay);
}

}  // namespace stokes::detail

#endif
