#pragma once

#include <cstddef>
#include <functional>

namespace bandgap {

// Worker count from BANDGAP_TRAP_THREADS (positive integer) or the
// hardware concurrency. Throws ConfigError on a malformed value.
int default_thread_count();

// Runs fn(0..n-1) on a pool of `threads` workers (0 = default count).
// Results must be written to preallocated, index-addressed storage so
// completion order cannot influence output order. The first exception
// thrown by any worker is rethrown after the pool joins.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  int threads = 0);

}  // namespace bandgap
