#pragma once

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace syntrace {

// Process-wide cap on OpenMP workers. 0 means "use the OpenMP default".
// Tests force 1 to compare the serial path bitwise against the parallel one.
inline std::atomic<int>& max_threads_slot() {
  static std::atomic<int> n{0};
  return n;
}

inline void set_max_threads(int n) { max_threads_slot().store(n); }

inline int effective_threads() {
#ifdef _OPENMP
  const int cap = max_threads_slot().load();
  const int def = omp_get_max_threads();
  return cap > 0 ? (cap < def ? cap : def) : def;
#else
  return 1;
#endif
}

// Static partition of [0, n). The body must write only to its own slots;
// callers do any cross-slot reduction afterwards in index order, so the
// result never depends on the thread count.
template <class F>
void parallel_for(int n, F&& f) {
#ifdef _OPENMP
  const int k = effective_threads();
  if (k > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(k)
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
#endif
  for (int i = 0; i < n; ++i) f(i);
}

}  // namespace syntrace
