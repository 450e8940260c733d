#pragma once

#include <cstdint>
#include <functional>

namespace mrs {

/// Worker cap: the MRS_THREADS environment variable when set (minimum 1),
/// otherwise the hardware concurrency.
int thread_cap();

/// Runs fn(i) for i in [0, n) on up to thread_cap() workers.  Tasks must
/// write to disjoint state; the iteration space split is static, so results
/// are position-deterministic.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace mrs
