#pragma once

#include <cstddef>
#include <functional>

namespace golod {

/// Worker count: min(hardware concurrency, GOLODKIT_THREADS when set).
int worker_count();

/// Runs fn(begin, end) over a partition of [0, n) across workers and joins.
/// Serial when worker_count() == 1 or n is small.
void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn);

}  // namespace golod
