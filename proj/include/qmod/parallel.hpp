#pragma once

#include <cstddef>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qmod::par {

// Runtime switch for the OpenMP kernels. Every parallel kernel has a serial
// twin producing bit-identical results; the switch lets tests and the
// benchmark select the path explicitly. QMOD_SERIAL=1 in the environment
// forces serial execution.
inline bool& enabled_flag() {
    static bool flag = [] {
        const char* env = std::getenv("QMOD_SERIAL");
        return !(env && env[0] == '1');
    }();
    return flag;
}

inline bool enabled() { return enabled_flag(); }
inline void set_enabled(bool on) { enabled_flag() = on; }

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Index-space parallel for. Work items must be independent; results must be
// written to disjoint slots so the outcome is schedule-independent.
template <class F>
void for_index(std::size_t n, F&& f) {
#ifdef _OPENMP
    if (enabled() && n > 1) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            f(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i)
        f(i);
}

} // namespace qmod::par
