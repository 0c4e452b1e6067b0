#ifndef CERGRAPH_ENUMERATE_HPP
#define CERGRAPH_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cergraph/budget.hpp"
#include "cergraph/graph.hpp"
#include "cergraph/permutation.hpp"
#include "cergraph/structure.hpp"

namespace cergraph {

// (k+1)^C(n,2), checked against the enumeration budget.
std::uint64_t graph_count(int n, int k, const Budget& budget = default_budget());

// All graphs on (n, k) in ascending lexicographic order of the edge vector.
// Streams are cheap to re-create, one per thread.
class GraphEnumeration {
public:
    GraphEnumeration(int n, int k, const Budget& budget = default_budget());

    std::optional<LabelledGraph> next();
    std::uint64_t total() const { return total_; }

    // Position of g in the enumeration order.
    static std::uint64_t rank(const LabelledGraph& g);

private:
    LabelledGraph current_;
    std::uint64_t total_;
    std::uint64_t produced_ = 0;
};

// All n! permutations in ascending lexicographic order of the mapping.
class PermutationEnumeration {
public:
    explicit PermutationEnumeration(int n, const Budget& budget = default_budget());

    std::optional<Permutation> next();
    std::uint64_t total() const { return total_; }

private:
    std::vector<int> mapping_;
    std::uint64_t total_;
    bool done_ = false;
};

// All structures (isomorphism classes) on (n, k), in ascending lexicographic
// order of the canonical edge vector; each class exactly once. Cost is
// graph enumeration times a canonical-representative test.
class StructureEnumeration {
public:
    StructureEnumeration(int n, int k, const Budget& budget = default_budget());

    std::optional<StructureKey> next();

private:
    GraphEnumeration graphs_;
    Budget budget_;
};

// Number of structures on (n, k); full scan.
std::uint64_t structure_count(int n, int k, const Budget& budget = default_budget());

// Convenience: materialize a full structure list.
std::vector<StructureKey> all_structures(int n, int k, const Budget& budget = default_budget());

} // namespace cergraph

#endif
