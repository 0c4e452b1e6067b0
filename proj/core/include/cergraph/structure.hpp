#ifndef CERGRAPH_STRUCTURE_HPP
#define CERGRAPH_STRUCTURE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "cergraph/budget.hpp"
#include "cergraph/graph.hpp"
#include "cergraph/permutation.hpp"

namespace cergraph {

// Relabel vertices: the result's edge at (i, j) is g's edge at
// (p^-1(i), p^-1(j)).
LabelledGraph apply_permutation(const LabelledGraph& g, const Permutation& p);

// n! for n <= 20.
std::uint64_t factorial(int n);

// Canonical representative of an isomorphism class: the lexicographically
// smallest edge sequence over all n! relabelings. Exact brute force, so
// construction is gated by the permutation budget.
class StructureKey {
public:
    explicit StructureKey(const LabelledGraph& g, const Budget& budget = default_budget());

    const LabelledGraph& canonical_graph() const { return canonical_; }
    int vertex_count() const { return canonical_.vertex_count(); }
    int max_weight() const { return canonical_.max_weight(); }
    int edge_cardinality() const { return canonical_.edge_cardinality(); }

    std::string to_text() const { return canonical_.to_text(); }
    static StructureKey from_text(std::string_view text, const Budget& budget = default_budget());

    friend bool operator==(const StructureKey&, const StructureKey&) = default;
    friend std::strong_ordering operator<=>(const StructureKey&, const StructureKey&) = default;

private:
    LabelledGraph canonical_;
};

StructureKey canonicalize(const LabelledGraph& g, const Budget& budget = default_budget());

// |Aut(g)|: number of permutations fixing g. Divides n!.
std::uint64_t automorphism_count(const LabelledGraph& g, const Budget& budget = default_budget());
std::uint64_t automorphism_count(const StructureKey& s, const Budget& budget = default_budget());

// n!/|Aut(g)|: the number of distinct labelled graphs sharing g's structure.
std::uint64_t distinct_labelings(const LabelledGraph& g, const Budget& budget = default_budget());
std::uint64_t distinct_labelings(const StructureKey& s, const Budget& budget = default_budget());

} // namespace cergraph

#endif
