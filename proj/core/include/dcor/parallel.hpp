#pragma once

// Deterministic helpers for the compute modules. Results are identical for
// any worker count: parallel work only fills indexed slots, and reductions
// always run the same fixed pairwise tree.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dcor {

// Worker cap from DCOR_THREADS (0 or unset = auto).
int worker_count();

// f(i) for i in [0, n), possibly on several threads. f must be pure with
// respect to everything except its own slot.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& f);

// Fixed pairwise-reduction tree; bit-identical regardless of thread count.
double pairwise_sum(std::span<const double> xs);

}  // namespace dcor
