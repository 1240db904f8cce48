#ifndef STOKES_PARALLEL_HPP
#define STOKES_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace stokes {

// Static-partition parallel loop. Each index writes only its own slot in the
// caller's output, so results are bit-identical for any thread count.
template <typename F>
void parallel_for(std::size_t n, F&& body) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || n < 16) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::size_t n_threads = std::min<std::size_t>(hw, n);
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += n_threads) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace stokes

#endif
