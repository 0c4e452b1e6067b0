#include "cergraph/structure.hpp"

#include <algorithm>
#include <numeric>

#include "cergraph/errors.hpp"

namespace cergraph {

namespace {

void check_permutation_budget(int n, const Budget& budget, const char* what) {
    if (n > budget.max_permutation_n)
        throw BudgetError(std::string(what) + ": n exceeds the permutation enumeration budget");
}

// Edge vector of the relabeled graph for mapping m acting as the permutation.
std::vector<EdgeSymbol> relabeled_edges(const LabelledGraph& g, const std::vector<int>& inv) {
    const int n = g.vertex_count();
    std::vector<EdgeSymbol> out(g.pair_count());
    std::size_t e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out[e++] = g.edge(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]);
    return out;
}

} // namespace

LabelledGraph apply_permutation(const LabelledGraph& g, const Permutation& p) {
    if (p.size() != g.vertex_count())
        throw InvalidArgument("apply_permutation: permutation size differs from vertex count");
    return LabelledGraph(g.vertex_count(), g.max_weight(),
                         relabeled_edges(g, p.inverse().mapping()));
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw InvalidArgument("factorial argument outside [0, 20]");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

StructureKey::StructureKey(const LabelledGraph& g, const Budget& budget)
    : canonical_(g) {
    const int n = g.vertex_count();
    check_permutation_budget(n, budget, "canonicalize");

    // Enumerating mappings m covers all relabelings; using m as the inverse
    // image avoids inverting each candidate.
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    std::vector<EdgeSymbol> best = g.edges();
    do {
        std::vector<EdgeSymbol> cand = relabeled_edges(g, m);
        if (cand < best) best = std::move(cand);
    } while (std::next_permutation(m.begin(), m.end()));
    canonical_ = LabelledGraph(n, g.max_weight(), std::move(best));
}

StructureKey StructureKey::from_text(std::string_view text, const Budget& budget) {
    return StructureKey(LabelledGraph::from_text(text), budget);
}

StructureKey canonicalize(const LabelledGraph& g, const Budget& budget) {
    return StructureKey(g, budget);
}

std::uint64_t automorphism_count(const LabelledGraph& g, const Budget& budget) {
    const int n = g.vertex_count();
    check_permutation_budget(n, budget, "automorphism_count");
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    std::uint64_t count = 0;
    do {
        if (relabeled_edges(g, m) == g.edges()) ++count;
    } while (std::next_permutation(m.begin(), m.end()));
    return count;
}

std::uint64_t automorphism_count(const StructureKey& s, const Budget& budget) {
    return automorphism_count(s.canonical_graph(), budget);
}

std::uint64_t distinct_labelings(const LabelledGraph& g, const Budget& budget) {
    // |Aut| divides n! (orbit-stabilizer), so the division is exact.
    return factorial(g.vertex_count()) / automorphism_count(g, budget);
}

std::uint64_t distinct_labelings(const StructureKey& s, const Budget& budget) {
    return distinct_labelings(s.canonical_graph(), budget);
}

} // namespace cergraph
