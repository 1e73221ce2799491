#include "rqwave/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rqwave::par {

namespace {
std::atomic<ExecMode> g_mode{ExecMode::openmp};
}

ExecMode execution_mode()
{
    return g_mode.load(std::memory_order_relaxed);
}

void set_execution_mode(ExecMode mode)
{
    g_mode.store(mode, std::memory_order_relaxed);
}

void set_thread_count(int n)
{
#ifdef _OPENMP
    if (n > 0)
        omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads()
{
#ifdef _OPENMP
    return execution_mode() == ExecMode::openmp ? omp_get_max_threads() : 1;
#else
    return 1;
#endif
}

} // namespace rqwave::par
