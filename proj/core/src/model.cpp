#include "cergraph/model.hpp"

#include <cmath>

#include "cergraph/enumerate.hpp"
#include "cergraph/errors.hpp"
#include "pair_kernel.hpp"

namespace cergraph {

namespace {

void check_permutation_budget(int n, const Budget& budget, const char* what) {
    if (n > budget.max_permutation_n)
        throw BudgetError(std::string(what) + ": n exceeds the permutation enumeration budget");
}

void check_kinds(const SourceObject& ua, const SourceObject& ub, SourceVariant variant) {
    if (kind_of(ua) != compressed_kind(variant) || kind_of(ub) != side_kind(variant))
        throw InvalidArgument("object kinds do not match the source variant");
    if (object_vertex_count(ua) != object_vertex_count(ub))
        throw InvalidArgument("objects must share the same vertex count");
}

double log2_factorial(int n) { return std::log2(static_cast<double>(factorial(n))); }

} // namespace

ObjectKind kind_of(const SourceObject& u) {
    return std::holds_alternative<LabelledGraph>(u) ? ObjectKind::Graph : ObjectKind::Structure;
}

const LabelledGraph& underlying_graph(const SourceObject& u) {
    if (const auto* g = std::get_if<LabelledGraph>(&u)) return *g;
    return std::get<StructureKey>(u).canonical_graph();
}

int object_vertex_count(const SourceObject& u) { return underlying_graph(u).vertex_count(); }

SourceObject make_source_object(const LabelledGraph& g, ObjectKind kind, const Budget& budget) {
    if (kind == ObjectKind::Graph) return SourceObject{g};
    return SourceObject{StructureKey(g, budget)};
}

std::string serialize_canonical(const SourceObject& u) {
    const char tag = kind_of(u) == ObjectKind::Graph ? 'G' : 'S';
    return tag + std::string("|") + underlying_graph(u).to_text();
}

std::pair<LabelledGraph, LabelledGraph> sample_pair(const JointEdgeDistribution& dist, int n,
                                                    Rng& rng) {
    if (n < 1) throw InvalidArgument("sample_pair: n must be >= 1");
    const int cells = (dist.ka() + 1) * (dist.kb() + 1);
    std::vector<double> cum(static_cast<std::size_t>(cells));
    double acc = 0.0;
    for (int a = 0; a <= dist.ka(); ++a)
        for (int b = 0; b <= dist.kb(); ++b) {
            acc += dist.prob(a, b);
            cum[static_cast<std::size_t>(a * (dist.kb() + 1) + b)] = acc;
        }

    const std::size_t pairs = LabelledGraph::pair_count(n);
    std::vector<EdgeSymbol> ea(pairs), eb(pairs);
    for (std::size_t e = 0; e < pairs; ++e) {
        const double u = rng.next_unit();
        int cell = cells - 1;
        for (int c = 0; c < cells; ++c) {
            if (u < cum[static_cast<std::size_t>(c)]) {
                cell = c;
                break;
            }
        }
        ea[e] = static_cast<EdgeSymbol>(cell / (dist.kb() + 1));
        eb[e] = static_cast<EdgeSymbol>(cell % (dist.kb() + 1));
    }
    return {LabelledGraph(n, dist.ka(), std::move(ea)), LabelledGraph(n, dist.kb(), std::move(eb))};
}

LogProb log_joint_graph_prob(const LabelledGraph& ga, const LabelledGraph& gb,
                             const JointEdgeDistribution& dist) {
    detail::check_pairing_args(ga, gb, dist);
    detail::PairCountMatrix counts(dist.ka(), dist.kb());
    const auto& ea = ga.edges();
    const auto& eb = gb.edges();
    for (std::size_t e = 0; e < ea.size(); ++e) counts.bump(ea[e], eb[e]);
    return counts.evaluate(dist);
}

MaxPermResult max_perm_log_joint(const LabelledGraph& ga, const LabelledGraph& gb,
                                 const JointEdgeDistribution& dist, const Budget& budget) {
    detail::check_pairing_args(ga, gb, dist);
    const int n = ga.vertex_count();
    check_permutation_budget(n, budget, "max_perm_log_joint");

    const detail::SymbolMatrix bmat(gb);
    detail::PairCountMatrix counts(dist.ka(), dist.kb());
    LogProb best = LogProb::zero();
    std::vector<int> best_mapping;
    bool first = true;
    // Mapping m pairs a_ij with b_{m(i)m(j)}, i.e. the relabeling pi = m^-1.
    detail::for_each_mapping(n, [&](const std::vector<int>& m) {
        detail::accumulate_counts(ga.edges(), bmat, m, counts);
        const LogProb v = counts.evaluate(dist);
        if (first || v > best) {
            best = v;
            best_mapping = m;
            first = false;
        }
    });
    return MaxPermResult{best, Permutation(best_mapping).inverse()};
}

MaxPermPairResult max_perm_log_joint_two_sided(const LabelledGraph& ga, const LabelledGraph& gb,
                                               const JointEdgeDistribution& dist,
                                               const Budget& budget) {
    detail::check_pairing_args(ga, gb, dist);
    const int n = ga.vertex_count();
    check_permutation_budget(n, budget, "max_perm_log_joint_two_sided");

    const detail::SymbolMatrix amat(ga);
    const detail::SymbolMatrix bmat(gb);
    detail::PairCountMatrix counts(dist.ka(), dist.kb());
    LogProb best = LogProb::zero();
    std::vector<int> best_a, best_b;
    bool first = true;
    detail::for_each_mapping(n, [&](const std::vector<int>& ma) {
        detail::for_each_mapping(n, [&](const std::vector<int>& mb) {
            counts.reset();
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    counts.bump(amat.at(ma[static_cast<std::size_t>(i)], ma[static_cast<std::size_t>(j)]),
                                bmat.at(mb[static_cast<std::size_t>(i)], mb[static_cast<std::size_t>(j)]));
            const LogProb v = counts.evaluate(dist);
            if (first || v > best) {
                best = v;
                best_a = ma;
                best_b = mb;
                first = false;
            }
        });
    });
    // Pairing with (ma, mb) evaluates P(pi_a(ga), pi_b(gb)) for pi = m^-1.
    return MaxPermPairResult{best, Permutation(best_a).inverse(), Permutation(best_b).inverse()};
}

LogProb permutation_sum_log_joint(const LabelledGraph& ga, const LabelledGraph& gb,
                                  const JointEdgeDistribution& dist, const Budget& budget) {
    detail::check_pairing_args(ga, gb, dist);
    const int n = ga.vertex_count();
    check_permutation_budget(n, budget, "permutation_sum_log_joint");

    if (detail::affine_statistic_applicable(ga, gb, dist)) {
        const detail::AffineStatistic affine(ga, gb, dist);
        const auto hist = detail::statistic_histogram(ga, gb);
        LogSumExp2 acc;
        for (std::size_t s = 0; s < hist.size(); ++s) {
            if (hist[s] == 0) continue;
            acc.add_log2(affine.log2_at(static_cast<int>(s)) +
                         std::log2(static_cast<double>(hist[s])));
        }
        return acc.result();
    }

    const detail::SymbolMatrix bmat(gb);
    detail::PairCountMatrix counts(dist.ka(), dist.kb());
    LogSumExp2 acc;
    detail::for_each_mapping(n, [&](const std::vector<int>& m) {
        detail::accumulate_counts(ga.edges(), bmat, m, counts);
        acc.add(counts.evaluate(dist));
    });
    return acc.result();
}

LogProb log_marginal_graph_prob(const LabelledGraph& g, const JointEdgeDistribution& dist,
                                MarginalSide side) {
    const int kmax = dist.max_weight(side);
    double sum = 0.0;
    for (EdgeSymbol s : g.edges()) {
        if (s > kmax) throw InvalidArgument("graph carries a symbol outside the marginal alphabet");
        const double p = side == MarginalSide::A ? dist.marginal_a(s) : dist.marginal_b(s);
        if (p <= 0.0) return LogProb::zero();
        sum += dist.log2_marginal(side, s);
    }
    return LogProb::from_log2(sum);
}

LogProb log_structure_prob(const StructureKey& s, const JointEdgeDistribution& dist,
                           MarginalSide side, const Budget& budget) {
    const LogProb marginal = log_marginal_graph_prob(s.canonical_graph(), dist, side);
    if (marginal.is_zero()) return LogProb::zero();
    const double labelings = static_cast<double>(distinct_labelings(s.canonical_graph(), budget));
    return LogProb::from_log2(std::log2(labelings) + marginal.log2_value());
}

LogProb log_joint_prob(const SourceObject& ua, const SourceObject& ub, SourceVariant variant,
                       const JointEdgeDistribution& dist, const Budget& budget) {
    check_kinds(ua, ub, variant);
    const LabelledGraph& ga = underlying_graph(ua);
    const LabelledGraph& gb = underlying_graph(ub);

    if (variant == SourceVariant::GraphGivenGraph) return log_joint_graph_prob(ga, gb, dist);

    const LogProb sum = permutation_sum_log_joint(ga, gb, dist, budget);
    if (sum.is_zero()) return LogProb::zero();
    double v = sum.log2_value();
    switch (variant) {
        case SourceVariant::GraphGivenStructure:
            v -= std::log2(static_cast<double>(automorphism_count(gb, budget)));
            break;
        case SourceVariant::StructureGivenGraph:
            // sum over pi of P(pi(ga), gb) equals the same permutation sum
            // by the symmetry of the adjacency matrices.
            v -= std::log2(static_cast<double>(automorphism_count(ga, budget)));
            break;
        case SourceVariant::StructureGivenStructure:
            v += log2_factorial(ga.vertex_count());
            v -= std::log2(static_cast<double>(automorphism_count(ga, budget)));
            v -= std::log2(static_cast<double>(automorphism_count(gb, budget)));
            break;
        default:
            break;
    }
    return LogProb::from_log2(v);
}

LogProb log_marginal_prob(const SourceObject& ub, const JointEdgeDistribution& dist,
                          const Budget& budget) {
    if (kind_of(ub) == ObjectKind::Graph)
        return log_marginal_graph_prob(std::get<LabelledGraph>(ub), dist, MarginalSide::B);
    return log_structure_prob(std::get<StructureKey>(ub), dist, MarginalSide::B, budget);
}

LogProb log_conditional(const SourceObject& ua, const SourceObject& ub, SourceVariant variant,
                        const JointEdgeDistribution& dist, const Budget& budget) {
    check_kinds(ua, ub, variant);
    const LabelledGraph& ga = underlying_graph(ua);
    const LabelledGraph& gb = underlying_graph(ub);

    const LogProb marginal_b = log_marginal_graph_prob(gb, dist, MarginalSide::B);
    if (marginal_b.is_zero()) return LogProb::zero(); // conditioning event has probability 0

    if (variant == SourceVariant::GraphGivenGraph) {
        // Straight per-pair form: sum log2 p[a][b] - sum log2 p_B[b].
        const LogProb joint = log_joint_graph_prob(ga, gb, dist);
        return joint / marginal_b;
    }

    const LogProb sum = permutation_sum_log_joint(ga, gb, dist, budget);
    if (sum.is_zero()) return LogProb::zero();
    double v = sum.log2_value() - marginal_b.log2_value();
    switch (variant) {
        case SourceVariant::GraphGivenStructure:
            // sum_pi P(ga, pi(gb)) / (n! P_B(gb)); |Aut(gb)| cancels between
            // the joint and the structure marginal.
            v -= log2_factorial(ga.vertex_count());
            break;
        case SourceVariant::StructureGivenGraph:
            // sum_pi P(pi(ga), gb) / (|Aut(ga)| P_B(gb)).
            v -= std::log2(static_cast<double>(automorphism_count(ga, budget)));
            break;
        case SourceVariant::StructureGivenStructure:
            // The double permutation sum is n! times the single sum; the n!
            // cancels against the structure marginal's labeling count.
            v -= std::log2(static_cast<double>(automorphism_count(ga, budget)));
            break;
        default:
            break;
    }
    return LogProb::from_log2(v);
}

LogProb log_conditional_alignment_form(const LabelledGraph& ga, const StructureKey& sb,
                                       const JointEdgeDistribution& dist, const Budget& budget) {
    if (!dist.unweighted() || !ga.unweighted() || sb.max_weight() != 1)
        throw InvalidArgument("the alignment form is defined for the unweighted case");
    if (!(dist.p00() > 0.0 && dist.p01() > 0.0 && dist.p10() > 0.0 && dist.p11() > 0.0))
        throw InvalidArgument("the alignment form needs all four cells of P_{A,B} positive");
    const LabelledGraph& gb = sb.canonical_graph();
    if (ga.vertex_count() != gb.vertex_count())
        throw InvalidArgument("objects must share the same vertex count");
    const int n = ga.vertex_count();
    check_permutation_budget(n, budget, "log_conditional_alignment_form");

    const double pairs = static_cast<double>(ga.pair_count());
    const double log_ratio =
        std::log2(dist.p11() * dist.p00() / (dist.p10() * dist.p01()));
    double v = -log2_factorial(n);
    v += pairs * std::log2(dist.p00() / (dist.p10() + dist.p00()));
    v += ga.edge_cardinality() * std::log2(dist.p10() / dist.p00());
    v += sb.edge_cardinality() *
         std::log2(dist.p01() * (dist.p10() + dist.p00()) /
                   (dist.p00() * (dist.p01() + dist.p11())));

    const auto hist = detail::statistic_histogram(ga, gb);
    LogSumExp2 acc;
    for (std::size_t s = 0; s < hist.size(); ++s) {
        if (hist[s] == 0) continue;
        acc.add_log2(static_cast<double>(s) * log_ratio +
                     std::log2(static_cast<double>(hist[s])));
    }
    return LogProb::from_log2(v + acc.result().log2_value());
}

namespace {

std::vector<SourceObject> enumerate_objects(int n, int k, ObjectKind kind, const Budget& budget) {
    std::vector<SourceObject> out;
    if (kind == ObjectKind::Graph) {
        GraphEnumeration graphs(n, k, budget);
        while (auto g = graphs.next()) out.emplace_back(std::move(*g));
    } else {
        for (auto& s : all_structures(n, k, budget)) out.emplace_back(std::move(s));
    }
    return out;
}

} // namespace

double exact_conditional_entropy(int n, const JointEdgeDistribution& dist, SourceVariant variant,
                                 const Budget& budget) {
    const auto uas = enumerate_objects(n, dist.ka(), compressed_kind(variant), budget);
    const auto ubs = enumerate_objects(n, dist.kb(), side_kind(variant), budget);

    double entropy = 0.0;
    for (const auto& ub : ubs) {
        const LogProb marginal = log_marginal_prob(ub, dist, budget);
        if (marginal.is_zero()) continue;
        for (const auto& ua : uas) {
            const LogProb joint = log_joint_prob(ua, ub, variant, dist, budget);
            if (joint.is_zero()) continue;
            const double cond_log2 = joint.log2_value() - marginal.log2_value();
            entropy -= joint.to_prob() * cond_log2;
        }
    }
    return entropy;
}

double exact_structure_entropy(int n, const JointEdgeDistribution& dist, MarginalSide side,
                               const Budget& budget) {
    StructureEnumeration structures(n, dist.max_weight(side), budget);
    double entropy = 0.0;
    while (auto s = structures.next()) {
        const LogProb p = log_structure_prob(*s, dist, side, budget);
        if (p.is_zero()) continue;
        entropy -= p.to_prob() * p.log2_value();
    }
    return entropy;
}

} // namespace cergraph
