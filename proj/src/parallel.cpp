#include "fracwave/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>

namespace fracwave {

int worker_count() {
  static const int cached = [] {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("FRACWAVE_THREADS")) {
      int cap = std::atoi(env);
      if (cap >= 1) n = std::min(n, cap);
    }
    return std::max(1, n);
  }();
  return cached;
}

}  // namespace fracwave
