// OpenMP driver for the extremal search: work units are the smallest
// generator of a candidate set, scheduled dynamically. The serial reference
// loop lives in search.cpp and visits the same units in order.

#include <omp.h>

#include "search_internal.hpp"

namespace abelcay::detail {

std::vector<std::vector<std::int64_t>> scan_group_omp(ScanShared& sh, int threads) {
  std::vector<std::vector<std::int64_t>> hits;
  const std::int64_t lo = sh.degenerate ? 0 : 1;
  const std::int64_t hi = sh.group->order;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
  {
    Scratch s;
    std::vector<std::vector<std::int64_t>> local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t first = lo; first < hi; ++first) {
      if (sh.aborted.load(std::memory_order_relaxed)) continue;
      scan_first(sh, first, s, local);
    }
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  return hits;
}

}  // namespace abelcay::detail
