#pragma once

#include <cstddef>
#include <functional>

namespace qp {

/// Worker count for sweeps: QP_THREADS if set and positive, else hardware concurrency.
unsigned sweep_threads();

/// Runs body(i) for i in [0, count), split into contiguous chunks across sweep_threads().
/// The body must not touch shared mutable state without its own synchronization.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qp
