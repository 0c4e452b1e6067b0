#ifndef CERGRAPH_PARALLEL_HPP
#define CERGRAPH_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace cergraph {

// 0 or negative -> hardware concurrency (at least 1).
int resolve_workers(int requested);

// Runs body(i) for i in [0, count) split into contiguous chunks across
// workers. Bodies must write only to per-index slots; with per-trial seeds
// derived from a master seed the outcome is invariant to the worker count.
void parallel_trials(std::uint64_t count, int workers,
                     const std::function<void(std::uint64_t)>& body);

} // namespace cergraph

#endif
