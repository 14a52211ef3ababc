#pragma once

#include <cstddef>
#include <functional>

namespace sfwm
{
// Number of workers to use when the caller asks for `requested` (<= 0 means
// hardware concurrency).
int resolve_thread_count(int requested);

// Runs body(i) for i in [0, count) on up to `threads` workers. Indices are
// claimed dynamically; callers write results into preallocated slots so the
// output does not depend on scheduling. The first exception thrown by any
// body is rethrown after all workers join.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)> &body);
} // namespace sfwm
