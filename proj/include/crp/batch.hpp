#pragma once

#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crp {

/// Runs fn(i) for i in [0, n). workers <= 1 selects the serial reference
/// path; otherwise the loop is an OpenMP parallel-for. Tasks must be
/// independent and write results keyed by i, so the output is identical on
/// both paths.
template <typename Fn>
void run_batch(int n, int workers, Fn&& fn) {
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (int i = 0; i < n; ++i) fn(i);
#else
    for (int i = 0; i < n; ++i) fn(i);
#endif
}

inline int hardware_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace crp
