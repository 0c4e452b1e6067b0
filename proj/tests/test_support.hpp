#ifndef CERGRAPH_TESTS_SUPPORT_HPP
#define CERGRAPH_TESTS_SUPPORT_HPP

// Shared fixtures and independent oracles. The oracles deliberately avoid
// the library's count-matrix and permutation-sum machinery: they recompute
// quantities straight from the definitions so the two paths stay
// independent.

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "cergraph/distribution.hpp"
#include "cergraph/enumerate.hpp"
#include "cergraph/graph.hpp"
#include "cergraph/permutation.hpp"
#include "cergraph/rng.hpp"
#include "cergraph/structure.hpp"

namespace testsupport {

using cergraph::JointEdgeDistribution;
using cergraph::LabelledGraph;
using cergraph::Permutation;

// Graph from a 1-based weighted edge list, matching the paper's labels.
inline LabelledGraph graph_from_edges(
    int n, int k, const std::vector<std::tuple<int, int, int>>& edges) {
    LabelledGraph g(n, k);
    for (const auto& [i, j, w] : edges)
        g.set_edge(i - 1, j - 1, static_cast<cergraph::EdgeSymbol>(w));
    return g;
}

inline LabelledGraph unweighted_from_edges(int n,
                                           const std::vector<std::pair<int, int>>& edges) {
    LabelledGraph g(n, 1);
    for (const auto& [i, j] : edges) g.set_edge(i - 1, j - 1, 1);
    return g;
}

// Relabeling oracle: writes b_{pi(i) pi(j)} = a_{i j} entry by entry into a
// map keyed by the normalized pair, then reads the result back.
inline LabelledGraph relabel_oracle(const LabelledGraph& g, const Permutation& p) {
    std::map<std::pair<int, int>, int> entries;
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int pi = p(i), pj = p(j);
            if (pi > pj) std::swap(pi, pj);
            entries[{pi, pj}] = g.edge(i, j);
        }
    LabelledGraph out(n, g.max_weight());
    for (const auto& [pair, w] : entries)
        out.set_edge(pair.first, pair.second, static_cast<cergraph::EdgeSymbol>(w));
    return out;
}

// True iff some permutation relabels x into y; brute force over all n!.
inline bool isomorphic_oracle(const LabelledGraph& x, const LabelledGraph& y) {
    if (x.vertex_count() != y.vertex_count() || x.max_weight() != y.max_weight()) return false;
    cergraph::PermutationEnumeration perms(x.vertex_count());
    while (auto p = perms.next())
        if (relabel_oracle(x, *p) == y) return true;
    return false;
}

// Direct product probability of a pair, straight from the CER definition.
inline double joint_prob_oracle(const LabelledGraph& ga, const LabelledGraph& gb,
                                const JointEdgeDistribution& dist) {
    double p = 1.0;
    for (std::size_t e = 0; e < ga.edges().size(); ++e)
        p *= dist.prob(ga.edges()[e], gb.edges()[e]);
    return p;
}

inline double marginal_prob_oracle(const LabelledGraph& g, const JointEdgeDistribution& dist,
                                   cergraph::MarginalSide side) {
    double p = 1.0;
    for (cergraph::EdgeSymbol s : g.edges())
        p *= side == cergraph::MarginalSide::A ? dist.marginal_a(s) : dist.marginal_b(s);
    return p;
}

// All distinct labelings carrying the same structure as g.
inline std::vector<LabelledGraph> labelings_oracle(const LabelledGraph& g) {
    std::vector<LabelledGraph> out;
    cergraph::PermutationEnumeration perms(g.vertex_count());
    while (auto p = perms.next()) {
        LabelledGraph relabeled = relabel_oracle(g, *p);
        bool seen = false;
        for (const auto& h : out) seen = seen || h == relabeled;
        if (!seen) out.push_back(std::move(relabeled));
    }
    return out;
}

// Alignment statistic straight from the definition.
inline int statistic_oracle(const LabelledGraph& ga, const LabelledGraph& gb,
                            const Permutation& p) {
    int stat = 0;
    const int n = ga.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) stat += ga.edge(i, j) * gb.edge(p(i), p(j));
    return stat;
}

inline int matching_error_oracle(const LabelledGraph& ga, const LabelledGraph& gb,
                                 const Permutation& p) {
    int err = 0;
    const int n = ga.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int a = ga.edge(i, j);
            const int b = gb.edge(p(i), p(j));
            err += (1 - a) * b + a * (1 - b);
        }
    return err;
}

// Upper-tail p-value of a chi-square statistic.
inline double chi_square_pvalue(double statistic, int dof) {
    return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

inline Permutation random_permutation(int n, cergraph::Rng& rng) {
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
        std::swap(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]);
    }
    return Permutation(std::move(m));
}

// A strictly positive weighted (k=2) joint distribution for the weighted
// test cases.
inline JointEdgeDistribution weighted_test_dist() {
    return JointEdgeDistribution(2, 2,
                                 {0.30, 0.05, 0.05,
                                  0.05, 0.20, 0.05,
                                  0.05, 0.05, 0.20});
}

// A product distribution (A independent of B). The cross products
// p11*p00 and p10*p01 share the same two factors, so the degeneracy test
// p11*p00 == p10*p01 holds bit-exactly.
inline JointEdgeDistribution independent_dist() {
    return JointEdgeDistribution(1, 1, {0.3, 0.2, 0.3, 0.2});
}

} // namespace testsupport

#endif
