#ifndef BSAKS_PARALLEL_HPP
#define BSAKS_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace bsaks {

/// Worker count from BSAKS_THREADS (default: hardware concurrency, at least 1).
std::size_t thread_count();

/// Calls fn(i) for i in [0, n), split over thread_count() workers in
/// contiguous chunks. Callers write results into per-index slots, so the
/// outcome does not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace bsaks

#endif  // BSAKS_PARALLEL_HPP
