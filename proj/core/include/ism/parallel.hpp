#pragma once

#include <cstddef>
#include <functional>

namespace ism {

// Worker count: ISM_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned thread_count();

// Runs body(begin, end) over contiguous chunks of [0, n). Each index is
// visited exactly once; results written per index are independent of the
// thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 64);

}  // namespace ism
