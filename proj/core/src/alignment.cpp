#include "cergraph/alignment.hpp"

#include <algorithm>
#include <cmath>

#include "cergraph/errors.hpp"
#include "pair_kernel.hpp"

namespace cergraph {

namespace {

void check_unweighted_pair(const LabelledGraph& ga, const LabelledGraph& gb) {
    if (!ga.unweighted() || !gb.unweighted())
        throw InvalidArgument("alignment statistics are defined for unweighted graphs only");
    if (ga.vertex_count() != gb.vertex_count())
        throw InvalidArgument("graphs must share the same vertex count");
}

void check_permutation_budget(int n, const Budget& budget, const char* what) {
    if (n > budget.max_permutation_n)
        throw BudgetError(std::string(what) + ": n exceeds the permutation enumeration budget");
}

bool better(int candidate, int incumbent, OptimizeSense sense) {
    return sense == OptimizeSense::Max ? candidate > incumbent : candidate < incumbent;
}

void require_positive_cells(const JointEdgeDistribution& dist) {
    if (!(dist.p00() > 0.0 && dist.p01() > 0.0 && dist.p10() > 0.0 && dist.p11() > 0.0))
        throw InvalidArgument("the likelihood-ratio test needs all four cells of P_{A,B} positive");
}

} // namespace

PermutationShape shape_of(const Permutation& p) {
    int fixed = 0;
    int transpositions = 0;
    for (int i = 0; i < p.size(); ++i) {
        if (p(i) == i) {
            ++fixed;
        } else if (p(i) > i && p(p(i)) == i) {
            ++transpositions;
        }
    }
    return PermutationShape{fixed, transpositions};
}

int alignment_statistic(const LabelledGraph& ga, const LabelledGraph& gb, const Permutation& p) {
    check_unweighted_pair(ga, gb);
    if (p.size() != ga.vertex_count())
        throw InvalidArgument("permutation size differs from vertex count");
    const detail::SymbolMatrix bmat(gb);
    return detail::statistic_for_mapping(ga.edges(), bmat, p.mapping());
}

int matching_error(const LabelledGraph& ga, const LabelledGraph& gb, const Permutation& p) {
    check_unweighted_pair(ga, gb);
    // (1-a)b + a(1-b) summed over pairs: edges present on exactly one side.
    return ga.edge_cardinality() + gb.edge_cardinality() -
           2 * alignment_statistic(ga, gb, p);
}

AlignmentResult optimize_alignment(const LabelledGraph& ga, const LabelledGraph& gb,
                                   OptimizeSense sense, const Budget& budget) {
    check_unweighted_pair(ga, gb);
    const int n = ga.vertex_count();
    check_permutation_budget(n, budget, "optimize_alignment");

    const detail::SymbolMatrix bmat(gb);
    AlignmentResult result{sense == OptimizeSense::Max ? -1 : ga.vertex_count() * ga.vertex_count(),
                           {}, 0};
    detail::for_each_mapping(n, [&](const std::vector<int>& m) {
        const int stat = detail::statistic_for_mapping(ga.edges(), bmat, m);
        if (better(stat, result.value, sense)) {
            result.value = stat;
            result.witnesses.clear();
            result.witness_count = 0;
        }
        if (stat == result.value) {
            ++result.witness_count;
            if (result.witnesses.size() < AlignmentResult::kWitnessCap)
                result.witnesses.emplace_back(m);
        }
    });
    return result;
}

LabelledGraph map_deanonymize(const LabelledGraph& ga, const StructureKey& sb,
                              const JointEdgeDistribution& dist, const Budget& budget) {
    const LabelledGraph& gb = sb.canonical_graph();
    check_unweighted_pair(ga, gb);
    if (!dist.unweighted())
        throw InvalidArgument("map_deanonymize is defined for unweighted distributions");
    require_positive_cells(dist);

    const double lhs = dist.p11() * dist.p00();
    const double rhs = dist.p10() * dist.p01();
    if (lhs == rhs)
        throw DegenerateModelError(
            "p11*p00 == p10*p01: all labelings are equally likely, MAP is undefined");
    const OptimizeSense sense = lhs > rhs ? OptimizeSense::Max : OptimizeSense::Min;

    const int n = ga.vertex_count();
    check_permutation_budget(n, budget, "map_deanonymize");

    // Stream over all labelings pi^-1(gb): the labeling whose statistic is
    // optimal, lexicographically smallest edge sequence on ties.
    const detail::SymbolMatrix bmat(gb);
    bool first = true;
    int best_stat = 0;
    std::vector<EdgeSymbol> best_edges;
    std::vector<EdgeSymbol> cand(gb.pair_count());
    detail::for_each_mapping(n, [&](const std::vector<int>& m) {
        // Mapping m plays the paper's pi: the candidate labeling has
        // b'_ij = b_{m(i)m(j)}, and its statistic pairs a_ij with the same.
        int stat = 0;
        std::size_t e = 0;
        for (int i = 0; i < n; ++i) {
            const int mi = m[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n; ++j, ++e) {
                cand[e] = bmat.at(mi, m[static_cast<std::size_t>(j)]);
                stat += ga.edges()[e] & cand[e];
            }
        }
        if (first || better(stat, best_stat, sense) || (stat == best_stat && cand < best_edges)) {
            best_stat = stat;
            best_edges = cand;
            first = false;
        }
    });
    return LabelledGraph(n, gb.max_weight(), std::move(best_edges));
}

double expected_statistic(const PermutationShape& shape, const JointEdgeDistribution& dist,
                          int n) {
    if (!dist.unweighted())
        throw InvalidArgument("expected_statistic is defined for unweighted distributions");
    if (shape.fixed_points < 0 || shape.transpositions < 0 ||
        shape.fixed_points + 2 * shape.transpositions > n)
        throw InvalidArgument("permutation shape does not fit on n vertices");
    const double pairs = static_cast<double>(LabelledGraph::pair_count(n));
    const double l = static_cast<double>(shape.preserved_pairs());
    const double ea = dist.p10() + dist.p11();
    const double eb = dist.p01() + dist.p11();
    return l * dist.p11() + (pairs - l) * ea * eb;
}

ConcentrationBounds concentration_bounds(int n, double delta, const JointEdgeDistribution& dist) {
    if (!dist.unweighted())
        throw InvalidArgument("concentration_bounds is defined for unweighted distributions");
    if (n < 2) throw InvalidArgument("concentration_bounds needs n >= 2");
    if (delta < 0.0) throw InvalidArgument("delta must be >= 0");
    const double pairs = static_cast<double>(LabelledGraph::pair_count(n));
    const auto clamp01 = [](double x) { return std::min(1.0, std::max(0.0, x)); };

    const double exponent = pairs * delta * delta / 2.0;
    const double single = std::exp(-exponent);
    const double unioned = std::exp(-(exponent - n * std::log(static_cast<double>(n))));

    const double gap = std::sqrt(dist.p00() * dist.p11()) - std::sqrt(dist.p01() * dist.p10());
    const double map_exp = (n - 2) * gap * gap - std::log2(static_cast<double>(n));
    const double map_failure = std::exp2(-map_exp);

    return ConcentrationBounds{clamp01(single), clamp01(unioned), clamp01(map_failure)};
}

} // namespace cergraph
