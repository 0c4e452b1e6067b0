#ifndef CERGRAPH_SRC_PAIR_KERNEL_HPP
#define CERGRAPH_SRC_PAIR_KERNEL_HPP

// Shared inner loops for permutation scans: symbol matrices, co-occurrence
// counts, and the mapping enumerator. Private to the library sources.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cergraph/distribution.hpp"
#include "cergraph/errors.hpp"
#include "cergraph/graph.hpp"
#include "cergraph/logprob.hpp"

namespace cergraph::detail {

// Dense symmetric n x n symbol lookup for a graph.
struct SymbolMatrix {
    int n;
    std::vector<EdgeSymbol> m;

    explicit SymbolMatrix(const LabelledGraph& g)
        : n(g.vertex_count()), m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const EdgeSymbol s = g.edge(i, j);
                m[static_cast<std::size_t>(i) * n + j] = s;
                m[static_cast<std::size_t>(j) * n + i] = s;
            }
    }

    EdgeSymbol at(int i, int j) const { return m[static_cast<std::size_t>(i) * n + j]; }
};

// Integer co-occurrence counts N[a][b] of paired symbols over the C(n,2)
// vertex pairs. Probabilities are evaluated from the counts in a fixed
// row-major cell order, so configurations with equal counts produce
// bit-identical log probabilities.
class PairCountMatrix {
public:
    PairCountMatrix(int ka, int kb)
        : stride_(kb + 1),
          counts_(static_cast<std::size_t>(ka + 1) * static_cast<std::size_t>(kb + 1), 0) {}

    void reset() { std::fill(counts_.begin(), counts_.end(), 0); }

    void bump(unsigned a, unsigned b) {
        ++counts_[static_cast<std::size_t>(a) * static_cast<std::size_t>(stride_) + b];
    }

    int count(int a, int b) const {
        return counts_[static_cast<std::size_t>(a) * static_cast<std::size_t>(stride_) +
                       static_cast<std::size_t>(b)];
    }

    LogProb evaluate(const JointEdgeDistribution& dist) const {
        double sum = 0.0;
        std::size_t idx = 0;
        for (int a = 0; a <= dist.ka(); ++a)
            for (int b = 0; b <= dist.kb(); ++b, ++idx) {
                const int c = counts_[idx];
                if (c == 0) continue;
                if (!dist.in_support(a, b)) return LogProb::zero();
                sum += static_cast<double>(c) * dist.log2_prob(a, b);
            }
        return LogProb::from_log2(sum);
    }

private:
    int stride_;
    std::vector<int> counts_;
};

inline void check_pairing_args(const LabelledGraph& ga, const LabelledGraph& gb,
                               const JointEdgeDistribution& dist) {
    if (ga.vertex_count() != gb.vertex_count())
        throw InvalidArgument("graphs must share the same vertex count");
    for (EdgeSymbol s : ga.edges())
        if (s > dist.ka()) throw InvalidArgument("ga carries a symbol outside the A alphabet");
    for (EdgeSymbol s : gb.edges())
        if (s > dist.kb()) throw InvalidArgument("gb carries a symbol outside the B alphabet");
}

// Calls fn(m) for every mapping m of {0..n-1} in ascending lexicographic
// order.
template <typename F>
void for_each_mapping(int n, F&& fn) {
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    do {
        fn(const_cast<const std::vector<int>&>(m));
    } while (std::next_permutation(m.begin(), m.end()));
}

// Counts of (a_ij, b_{m(i) m(j)}) over pairs i < j.
inline void accumulate_counts(const std::vector<EdgeSymbol>& a_edges, const SymbolMatrix& b,
                              const std::vector<int>& m, PairCountMatrix& out) {
    out.reset();
    std::size_t e = 0;
    for (int i = 0; i < b.n; ++i) {
        const int mi = m[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < b.n; ++j, ++e)
            out.bump(a_edges[e], b.at(mi, m[static_cast<std::size_t>(j)]));
    }
}

// Unweighted alignment statistic sum over i<j of a_ij * b_{m(i)m(j)}.
inline int statistic_for_mapping(const std::vector<EdgeSymbol>& a_edges, const SymbolMatrix& b,
                                 const std::vector<int>& m) {
    int stat = 0;
    std::size_t e = 0;
    for (int i = 0; i < b.n; ++i) {
        const int mi = m[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < b.n; ++j, ++e)
            stat += a_edges[e] & b.at(mi, m[static_cast<std::size_t>(j)]);
    }
    return stat;
}

// In the unweighted full-support case the pair counts are determined by the
// alignment statistic alone (edge counts of both graphs are fixed), so the
// joint log probability is affine in the statistic. Permutation scans then
// reduce to a histogram over statistic values.
inline bool affine_statistic_applicable(const LabelledGraph& ga, const LabelledGraph& gb,
                                        const JointEdgeDistribution& dist) {
    return dist.unweighted() && ga.unweighted() && gb.unweighted() && dist.p00() > 0.0 &&
           dist.p01() > 0.0 && dist.p10() > 0.0 && dist.p11() > 0.0;
}

struct AffineStatistic {
    double base;  // log2 P at statistic 0
    double slope; // log2(p11*p00/(p10*p01))

    AffineStatistic(const LabelledGraph& ga, const LabelledGraph& gb,
                    const JointEdgeDistribution& dist) {
        const double l00 = dist.log2_prob(0, 0);
        const double l01 = dist.log2_prob(0, 1);
        const double l10 = dist.log2_prob(1, 0);
        const double l11 = dist.log2_prob(1, 1);
        const double ea = ga.edge_cardinality();
        const double eb = gb.edge_cardinality();
        const double pairs = static_cast<double>(ga.pair_count());
        base = pairs * l00 + ea * (l10 - l00) + eb * (l01 - l00);
        slope = l11 + l00 - l10 - l01;
    }

    double log2_at(int statistic) const { return base + slope * statistic; }
};

// counts[s] = number of mappings whose alignment statistic equals s.
inline std::vector<std::uint64_t> statistic_histogram(const LabelledGraph& ga,
                                                      const LabelledGraph& gb) {
    const SymbolMatrix bmat(gb);
    std::vector<std::uint64_t> hist(ga.pair_count() + 1, 0);
    for_each_mapping(ga.vertex_count(), [&](const std::vector<int>& m) {
        ++hist[static_cast<std::size_t>(statistic_for_mapping(ga.edges(), bmat, m))];
    });
    return hist;
}

} // namespace cergraph::detail

#endif
