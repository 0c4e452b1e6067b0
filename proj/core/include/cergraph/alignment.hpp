#ifndef CERGRAPH_ALIGNMENT_HPP
#define CERGRAPH_ALIGNMENT_HPP

#include <cstdint>
#include <vector>

#include "cergraph/budget.hpp"
#include "cergraph/distribution.hpp"
#include "cergraph/graph.hpp"
#include "cergraph/permutation.hpp"
#include "cergraph/structure.hpp"

namespace cergraph {

// Cycle-type summary of a permutation as far as the alignment expectation
// cares: k fixed points and t transpositions preserve
// l = C(k,2) + t vertex pairs.
struct PermutationShape {
    int fixed_points;
    int transpositions;

    int preserved_pairs() const {
        return fixed_points * (fixed_points - 1) / 2 + transpositions;
    }
};

PermutationShape shape_of(const Permutation& p);

// sum over i<j of a_ij * b_{p(i)p(j)}; unweighted graphs only.
int alignment_statistic(const LabelledGraph& ga, const LabelledGraph& gb, const Permutation& p);

// Count of vertex pairs carrying an edge in exactly one of the two graphs
// under the relabeling p.
int matching_error(const LabelledGraph& ga, const LabelledGraph& gb, const Permutation& p);

enum class OptimizeSense { Max, Min };

struct AlignmentResult {
    int value;
    // All optimal permutations in ascending lexicographic order, truncated
    // at kWitnessCap; witness_count is always the full count.
    std::vector<Permutation> witnesses;
    std::uint64_t witness_count;

    static constexpr std::size_t kWitnessCap = 20000;
};

// Exact optimum of the alignment statistic over all n! permutations.
AlignmentResult optimize_alignment(const LabelledGraph& ga, const LabelledGraph& gb,
                                   OptimizeSense sense, const Budget& budget = default_budget());

// MAP estimate of the labelling of sb given the correlated graph ga:
// maximizes the alignment statistic when p11*p00 > p10*p01, minimizes it
// otherwise. Ties broken by the lexicographically smallest edge sequence.
LabelledGraph map_deanonymize(const LabelledGraph& ga, const StructureKey& sb,
                              const JointEdgeDistribution& dist,
                              const Budget& budget = default_budget());

// E[sum a_ij b_{pi(i)pi(j)}] for a permutation of the given shape:
// l*p11 + (C(n,2) - l)*(p10+p11)*(p01+p11).
double expected_statistic(const PermutationShape& shape, const JointEdgeDistribution& dist, int n);

struct ConcentrationBounds {
    // exp(-C(n,2) * delta^2 / 2): fixed-permutation upper tail via the
    // bounded-difference inequality with c = 2.
    double single_perm_tail;
    // exp(-[C(n,2) * delta^2 / 2 - n ln n]): after the n! union bound.
    double union_tail;
    // 2^-[(n-2)(sqrt(p00 p11) - sqrt(p01 p10))^2 - log2 n]: failure bound
    // for MAP recovery of the true labelling.
    double map_failure;
};

// All values clamped to [0, 1]; requires an unweighted distribution.
ConcentrationBounds concentration_bounds(int n, double delta, const JointEdgeDistribution& dist);

} // namespace cergraph

#endif
