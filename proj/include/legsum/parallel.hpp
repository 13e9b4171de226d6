#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace legsum::par {

// Runtime switch between the OpenMP kernels and the serial reference path.
// Results are identical either way: bodies write disjoint slots and all
// reductions run serially in ascending index order afterwards.
inline bool& parallel_enabled() {
  static bool enabled = [] {
    const char* env = std::getenv("LEGSUM_SERIAL");
    return !(env && env[0] == '1');
  }();
  return enabled;
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <typename Body>
void for_each_index(int n, Body&& body) {
#ifdef _OPENMP
  if (parallel_enabled() && n > 1) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
#endif
  for (int i = 0; i < n; ++i) body(i);
}

}  // namespace legsum::par
