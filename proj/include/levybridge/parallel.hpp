#pragma once

#include <cstddef>
#include <functional>

namespace levy {

/// Worker cap: LEVY_BRIDGE_THREADS if set (>=1), else hardware concurrency.
unsigned thread_count();

/// Chunked parallel loop over [0, n); fn must only write to index-owned state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace levy
