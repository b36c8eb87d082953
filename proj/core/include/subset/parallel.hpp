#ifndef SUBSET_PARALLEL_HPP
#define SUBSET_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace subset {

// Number of worker threads used by data-parallel loops.  Defaults to the
// hardware concurrency, overridable via set_thread_count() or the
// SUBSET_THREADS environment variable (checked once, at first use).
int thread_count();
void set_thread_count(int n);  // n <= 0 resets to automatic

// Runs chunk_fn on contiguous disjoint ranges covering [0, n).  Every index
// is handled exactly once, so loops whose bodies write only to their own
// slots produce output identical to a sequential run regardless of the
// thread count.
void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t, std::int64_t)>& chunk_fn);

}  // namespace subset

#endif  // SUBSET_PARALLEL_HPP
