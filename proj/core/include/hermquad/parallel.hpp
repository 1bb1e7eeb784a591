#pragma once

#include <cstddef>
#include <functional>

namespace hermquad {

/// Current cap on worker threads (>= 1).  Defaults to the hardware
/// concurrency; the CLI lowers it from the HERMITE_QUAD_THREADS variable.
int max_threads();

/// Sets the thread cap; values below 1 are clamped to 1.
void set_max_threads(int n);

namespace detail {

// Runs fn(i) for i in [0, count).  Work is distributed over at most
// max_threads() threads; fn must write its result to an index-owned slot so
// the outcome is independent of the thread count.
void parallel_index_apply(std::size_t count,
                          const std::function<void(std::size_t)>& fn);

}  // namespace detail
}  // namespace hermquad
