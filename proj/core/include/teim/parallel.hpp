#pragma once

// ============================================================================
// Minimal task fan-out used for embarrassingly parallel work (independent
// SVDs, snapshot slices, sweep configurations). The TEIM_THREADS environment
// variable caps the worker count; results are written to caller-owned slots
// so output is deterministic regardless of scheduling.
// ============================================================================

#include <cstddef>
#include <functional>

namespace teim {

// Number of workers: min(hardware_concurrency, TEIM_THREADS if set), >= 1.
unsigned worker_count();

// Run body(i) for i in [0, n), fanning out across worker_count() threads.
// body must only write to disjoint, caller-owned locations.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace teim
