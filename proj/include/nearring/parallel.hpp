#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nearring::detail {

// Gate for the OpenMP kernels: skip the parallel region when the estimated
// table-read count is too small to amortize it or when we are already inside
// a parallel region (suite items fan out at the top level). Results are
// identical either way; only the schedule changes.
inline bool use_parallel(long long estimated_work) {
#ifdef _OPENMP
  return estimated_work >= 16384 && !omp_in_parallel();
#else
  (void)estimated_work;
  return false;
#endif
}

}  // namespace nearring::detail
