#pragma once

#include <cstddef>
#include <functional>

namespace graphlab {

// Worker count: GRAPHLAB_THREADS when set to a positive integer, else the
// hardware concurrency (at least 1).
std::size_t worker_count();

// Runs body(i) for i in [0, n). Iterations must write to disjoint slots;
// results are therefore independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace graphlab
