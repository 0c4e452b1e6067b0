#include "cergraph/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "cergraph/errors.hpp"

namespace cergraph {

std::uint64_t graph_count(int n, int k, const Budget& budget) {
    if (n < 1) throw InvalidArgument("graph_count: n must be >= 1");
    if (k < 1) throw InvalidArgument("graph_count: k must be >= 1");
    const std::uint64_t base = static_cast<std::uint64_t>(k) + 1;
    std::uint64_t count = 1;
    for (std::size_t e = 0; e < LabelledGraph::pair_count(n); ++e) {
        if (count > budget.max_graph_enumeration / base)
            throw BudgetError("graph enumeration: (k+1)^C(n,2) exceeds the configured budget");
        count *= base;
    }
    if (count > budget.max_graph_enumeration)
        throw BudgetError("graph enumeration: (k+1)^C(n,2) exceeds the configured budget");
    return count;
}

GraphEnumeration::GraphEnumeration(int n, int k, const Budget& budget)
    : current_(n, k), total_(graph_count(n, k, budget)) {}

std::optional<LabelledGraph> GraphEnumeration::next() {
    if (produced_ == total_) return std::nullopt;
    if (produced_ == 0) {
        ++produced_;
        return current_;
    }
    // Odometer increment, rightmost symbol fastest: ascending lex order.
    auto edges = current_.edges();
    const EdgeSymbol k = static_cast<EdgeSymbol>(current_.max_weight());
    for (std::size_t e = edges.size(); e-- > 0;) {
        if (edges[e] < k) {
            ++edges[e];
            std::fill(edges.begin() + static_cast<std::ptrdiff_t>(e) + 1, edges.end(), 0);
            break;
        }
    }
    current_ = LabelledGraph(current_.vertex_count(), current_.max_weight(), std::move(edges));
    ++produced_;
    return current_;
}

std::uint64_t GraphEnumeration::rank(const LabelledGraph& g) {
    const std::uint64_t base = static_cast<std::uint64_t>(g.max_weight()) + 1;
    std::uint64_t r = 0;
    for (EdgeSymbol s : g.edges()) r = r * base + s;
    return r;
}

PermutationEnumeration::PermutationEnumeration(int n, const Budget& budget)
    : mapping_(static_cast<std::size_t>(n)) {
    if (n < 1) throw InvalidArgument("permutation enumeration: n must be >= 1");
    if (n > budget.max_permutation_n)
        throw BudgetError("permutation enumeration: n exceeds the configured budget");
    std::iota(mapping_.begin(), mapping_.end(), 0);
    total_ = factorial(n);
}

std::optional<Permutation> PermutationEnumeration::next() {
    if (done_) return std::nullopt;
    Permutation out{mapping_};
    done_ = !std::next_permutation(mapping_.begin(), mapping_.end());
    return out;
}

StructureEnumeration::StructureEnumeration(int n, int k, const Budget& budget)
    : graphs_(n, k, budget), budget_(budget) {
    if (n > budget.max_permutation_n)
        throw BudgetError("structure enumeration: n exceeds the permutation budget");
}

std::optional<StructureKey> StructureEnumeration::next() {
    // Emit a graph exactly when it is its own canonical form; canonical
    // representatives appear in ascending lex order, so each class shows
    // up once.
    while (auto g = graphs_.next()) {
        StructureKey key(*g, budget_);
        if (key.canonical_graph() == *g) return key;
    }
    return std::nullopt;
}

std::uint64_t structure_count(int n, int k, const Budget& budget) {
    StructureEnumeration structures(n, k, budget);
    std::uint64_t count = 0;
    while (structures.next()) ++count;
    return count;
}

std::vector<StructureKey> all_structures(int n, int k, const Budget& budget) {
    StructureEnumeration structures(n, k, budget);
    std::vector<StructureKey> out;
    while (auto s = structures.next()) out.push_back(std::move(*s));
    return out;
}

} // namespace cergraph
