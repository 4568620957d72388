#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace phycache {

// Data-parallel loop used by the oracle batches, the alpha-grid solver and the
// sweep driver. The serial path is kept as the reference for testing; results
// must be identical because every iteration writes only its own slot.
enum class ExecMode { Serial, Parallel };

template <typename Fn>
void parallel_for(std::size_t n, ExecMode mode, Fn&& fn) {
    if (mode == ExecMode::Serial) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

inline int parallel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace phycache
