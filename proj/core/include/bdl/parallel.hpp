#pragma once

#include <cstddef>
#include <functional>

namespace bdl {

/// Worker count: BDL_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Calls body(i) for i in [0, count) across up to thread_count() workers in
/// contiguous blocks. body must only write to state owned by index i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace bdl
