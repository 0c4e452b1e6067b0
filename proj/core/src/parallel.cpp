#include "cergraph/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace cergraph {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_trials(std::uint64_t count, int workers,
                     const std::function<void(std::uint64_t)>& body) {
    const int w = std::min<std::uint64_t>(resolve_workers(workers), std::max<std::uint64_t>(count, 1));
    if (w <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }

    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
    const std::uint64_t chunk = (count + w - 1) / w;
    for (int t = 0; t < w; ++t) {
        const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
        const std::uint64_t hi = std::min(count, lo + chunk);
        threads.emplace_back([&, t, lo, hi] {
            try {
                for (std::uint64_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace cergraph
