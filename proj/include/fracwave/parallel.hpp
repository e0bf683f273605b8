#ifndef FRACWAVE_PARALLEL_HPP
#define FRACWAVE_PARALLEL_HPP

namespace fracwave {

// worker cap: min(omp_get_max_threads(), FRACWAVE_THREADS) when the
// environment variable is set, read once per process
int worker_count();

}  // namespace fracwave

#endif
