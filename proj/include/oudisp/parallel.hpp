#pragma once

#include <cstddef>
#include <functional>

namespace oudisp {

/// Worker count for a scan of `jobs` items: hardware concurrency, capped by
/// the OU_DISPERSION_THREADS environment variable when set.
unsigned worker_count(std::size_t jobs);

/// Runs fn(0..n-1) on a small thread pool; each index owns its output slot,
/// so results are deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace oudisp
