#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace glmd {

/// Resolve the worker count for a parallel kernel. A positive `requested`
/// wins, then the GLMD_THREADS environment variable, then the OpenMP
/// default. Always at least 1; serial builds always get 1.
inline int resolve_threads(int requested = 0) {
#ifdef _OPENMP
    int n = 0;
    if (requested > 0) {
        n = requested;
    } else if (const char* env = std::getenv("GLMD_THREADS")) {
        n = std::atoi(env);
    }
    if (n <= 0) n = omp_get_max_threads();
    return std::max(1, n);
#else
    (void)requested;
    return 1;
#endif
}

}  // namespace glmd
