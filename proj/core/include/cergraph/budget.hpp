#ifndef CERGRAPH_BUDGET_HPP
#define CERGRAPH_BUDGET_HPP

#include <cstdint>

namespace cergraph {

// Caps for exhaustive computations. Operations that would enumerate all n!
// permutations or all (k+1)^C(n,2) graphs check these first and throw
// BudgetError instead of running away.
struct Budget {
    int max_permutation_n = 10;                        // n! enumerations allowed for n <= this
    std::uint64_t max_graph_enumeration = 1ull << 24;  // cap on (k+1)^C(n,2)
};

inline const Budget& default_budget() {
    static const Budget b{};
    return b;
}

} // namespace cergraph

#endif
