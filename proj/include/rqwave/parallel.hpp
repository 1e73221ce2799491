#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace rqwave::par {

enum class ExecMode { serial, openmp };

ExecMode execution_mode();
void set_execution_mode(ExecMode mode);

// n = 0 keeps the OpenMP runtime default (all hardware threads).
void set_thread_count(int n);
int max_threads();

// Elementwise loop; iterations must be independent.
template <typename F>
void parallel_for(std::int64_t n, F&& body)
{
    if (execution_mode() == ExecMode::openmp) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i)
            body(i);
    } else {
        for (std::int64_t i = 0; i < n; ++i)
            body(i);
    }
}

// Reduction with a fixed summation order: terms are accumulated in
// 1024-element blocks and the block partials are added in index order,
// so the result is bit-identical for any thread count.
template <typename T, typename F>
T block_sum(std::int64_t n, F&& term)
{
    constexpr std::int64_t block = 1024;
    const std::int64_t nblocks = (n + block - 1) / block;
    std::vector<T> partial(static_cast<std::size_t>(std::max<std::int64_t>(nblocks, 1)), T{});
    parallel_for(nblocks, [&](std::int64_t b) {
        const std::int64_t lo = b * block;
        const std::int64_t hi = std::min(n, lo + block);
        T acc{};
        for (std::int64_t i = lo; i < hi; ++i)
            acc += term(i);
        partial[static_cast<std::size_t>(b)] = acc;
    });
    T total{};
    for (const T& p : partial)
        total += p;
    return total;
}

} // namespace rqwave::par
