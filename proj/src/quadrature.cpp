#include "stokes/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "stokes/constants.hpp"
#include "stokes/errors.hpp"

namespace stokes {

GaussLegendre::GaussLegendre(int order) {
    nodes_.resize(order);
    weights_.resize(order);
    for (int i = 0; i < order; ++i) {
        double x = std::cos(pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-15 * std::abs(x) + 1e-300) break;
        }
        nodes_[i] = x;
        weights_[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    // ascending nodes
    std::reverse(nodes_.begin(), nodes_.end());
    std::reverse(weights_.begin(), weights_.end());
}

const GaussLegendre& shared_rule(int order) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<GaussLegendre>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[order];
    if (!slot) slot = std::make_unique<GaussLegendre>(order);
    return *slot;
}

namespace {

const GaussLegendre& rule12() {
    static const GaussLegendre r(12);
    return r;
}

struct Interval {
    double a, b;
    std::complex<double> value;  // refined estimate (two halves)
    double err;
};

void evaluate(const std::function<std::complex<double>(double)>& f, double a, double b,
              double noise_scale, Interval& out) {
    const GaussLegendre& r = rule12();
    std::complex<double> coarse = r.integrate(f, a, b);
    const double m = 0.5 * (a + b);
    std::complex<double> fine = 0.0;
    double mass = 0.0;
    for (const auto& [lo, hi] : {std::pair{a, m}, std::pair{m, b}}) {
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        std::complex<double> acc = 0.0;
        double amass = 0.0;
        for (std::size_t i = 0; i < r.nodes().size(); ++i) {
            const std::complex<double> v = f(mid + half * r.nodes()[i]);
            acc += r.weights()[i] * v;
            amass += r.weights()[i] * std::abs(v);
        }
        fine += acc * half;
        mass += amass * half;
    }
    out.a = a;
    out.b = b;
    out.value = fine;
    out.err = std::abs(fine - coarse);
    // below the evaluation noise of the local |f| mass nothing more can be
    // resolved; treat such intervals as converged
    if (out.err <= 16.0 * 2.220446049250313e-16 * noise_scale * mass) out.err = 0.0;
}

}  // namespace

std::complex<double> integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, const std::vector<double>& breakpoints, int max_intervals,
    double noise_scale) {
    std::vector<double> edges{a, b};
    for (double x : breakpoints)
        if (x > a && x < b) edges.push_back(x);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // worst-first refinement queue, keyed by error estimate
    auto cmp = [](const Interval& lhs, const Interval& rhs) {
        if (lhs.err != rhs.err) return lhs.err > rhs.err;
        return lhs.a < rhs.a;
    };
    std::multiset<Interval, decltype(cmp)> queue(cmp);

    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Interval iv;
        evaluate(f, edges[i], edges[i + 1], noise_scale, iv);
        queue.insert(iv);
    }

    auto total_err = [&] {
        double e = 0.0;
        for (const auto& iv : queue) e += iv.err;
        return e;
    };

    int count = static_cast<int>(queue.size());
    double err_sum = total_err();
    while (err_sum > abs_tol) {
        if (count >= max_intervals)
            throw QuadratureNonConvergence("adaptive quadrature: interval limit reached");
        Interval worst = *queue.begin();
        queue.erase(queue.begin());
        if (worst.b - worst.a <= 1e-15 * (std::abs(worst.a) + std::abs(worst.b)) + 1e-300)
            throw QuadratureNonConvergence("adaptive quadrature: interval underflow");
        double m = 0.5 * (worst.a + worst.b);
        Interval left, right;
        evaluate(f, worst.a, m, noise_scale, left);
        evaluate(f, m, worst.b, noise_scale, right);
        err_sum += left.err + right.err - worst.err;
        queue.insert(left);
        queue.insert(right);
        ++count;
    }

    std::complex<double> sum = 0.0;
    for (const auto& iv : queue) sum += iv.value;
    return sum;
}

}  // namespace stokes
