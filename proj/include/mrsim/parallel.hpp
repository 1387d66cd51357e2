#pragma once

#include <cstddef>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mrsim::parallel {

/// Number of workers used by for_each_index.  0 or negative resets to the
/// hardware default.  The worker count never changes results: every parallel
/// loop in this library writes to disjoint slots, so output is bitwise
/// identical at any setting.
void set_worker_count(int n);
int worker_count();

/// True when the library was compiled with OpenMP support.
bool openmp_enabled();

/// Serial reference kernel: plain loop, kept separate so tests and the
/// benchmark can compare it against the OpenMP path.
template <class F>
void for_each_index_serial(std::size_t n, F&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

/// Data-parallel map over [0, n).  body(i) must touch only slot i of any
/// shared output.  Falls back to the serial kernel when OpenMP is absent or
/// a single worker is requested.
template <class F>
void for_each_index(std::size_t n, F&& body) {
#ifdef _OPENMP
    const int workers = worker_count();
    if (workers > 1 && n > 1) {
        const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) num_threads(workers)
        for (std::ptrdiff_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
        return;
    }
#endif
    for_each_index_serial(n, std::forward<F>(body));
}

}  // namespace mrsim::parallel
