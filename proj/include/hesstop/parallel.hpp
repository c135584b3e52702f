#pragma once

#include <cstddef>
#include <functional>

namespace hesstop {

/// Worker count: hardware concurrency, capped by the HESSTOP_THREADS
/// environment variable when it holds a positive integer.
unsigned worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. The first
/// exception thrown by any body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hesstop
