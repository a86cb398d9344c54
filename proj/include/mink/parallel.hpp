#pragma once

#include <cstddef>
#include <functional>

namespace mink {

// Worker count: MINKPLANE_THREADS if set (>= 1), else available parallelism.
int worker_count();

// Runs fn(i) for i in [0, n). Chunked across workers; fn must be safe to run
// concurrently for distinct i (write only to per-index slots).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace mink
