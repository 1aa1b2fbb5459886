#pragma once

#include <cstddef>
#include <functional>

namespace tractlab {

// Worker count from TRACTLAB_THREADS, else hardware concurrency (at least 1).
unsigned default_workers();

// Calls body(i) for i in [0, count) on up to `workers` threads. Each index is
// handled by exactly one thread, so writes to per-index slots are race-free and
// results do not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace tractlab
