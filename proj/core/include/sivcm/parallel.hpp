#pragma once

#include <cstddef>
#include <functional>

namespace sivcm {

/// Worker count: explicit request, else the SIVCM_THREADS environment
/// variable, else hardware concurrency. 0 means auto.
int resolve_thread_count(int requested = 0);

/// Runs fn(i) for i in [0, count) on a small worker pool. Work items must be
/// independent; results should be written to per-index slots so the outcome
/// is identical for any worker count.
void parallel_for_index(std::size_t count,
                        const std::function<void(std::size_t)>& fn,
                        int threads = 0);

}  // namespace sivcm
