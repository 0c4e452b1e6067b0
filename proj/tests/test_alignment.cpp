#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "cergraph/alignment.hpp"
#include "cergraph/enumerate.hpp"
#include "cergraph/errors.hpp"
#include "cergraph/model.hpp"
#include "cergraph/stats.hpp"
#include "test_support.hpp"

using namespace cergraph;
using namespace testsupport;

TEST_SUITE("alignment") {

TEST_CASE("permutation shapes") {
    CHECK(shape_of(Permutation::identity(5)).fixed_points == 5);
    CHECK(shape_of(Permutation::identity(5)).transpositions == 0);
    CHECK(shape_of(Permutation::identity(5)).preserved_pairs() == 10);

    const auto swap01 = Permutation::transposition(4, 0, 1);
    CHECK(shape_of(swap01).fixed_points == 2);
    CHECK(shape_of(swap01).transpositions == 1);
    CHECK(shape_of(swap01).preserved_pairs() == 2); // C(2,2) + 1

    const auto cyc = Permutation::full_cycle(4);
    CHECK(shape_of(cyc).fixed_points == 0);
    CHECK(shape_of(cyc).transpositions == 0);
    CHECK(shape_of(cyc).preserved_pairs() == 0);
}

TEST_CASE("alignment statistic basics") {
    LabelledGraph complete(4, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) complete.set_edge(i, j, 1);
    Rng rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        const Permutation p = random_permutation(4, rng);
        CHECK(alignment_statistic(complete, complete, p) == 6);
        CHECK(alignment_statistic(LabelledGraph(4, 1), complete, p) == 0);
    }

    // Path 1-2-3 aligned with itself under the end swap keeps both edges.
    const LabelledGraph path = unweighted_from_edges(3, {{1, 2}, {2, 3}});
    const Permutation swap13 = Permutation::transposition(3, 0, 2);
    CHECK(alignment_statistic(path, path, swap13) == 2);
    CHECK(alignment_statistic(path, path, swap13) == statistic_oracle(path, path, swap13));

    CHECK_THROWS_AS(alignment_statistic(LabelledGraph(3, 2), path, swap13), InvalidArgument);
}

TEST_CASE("alignment statistic matches the oracle on random inputs") {
    Rng rng(19);
    const auto half = JointEdgeDistribution::subsampling(0.5, 0.5);
    for (int rep = 0; rep < 60; ++rep) {
        Rng sample_rng(mix_seed(88, static_cast<std::uint64_t>(rep)));
        const auto [ga, gb] = sample_pair(half, 5, sample_rng);
        const Permutation p = random_permutation(5, rng);
        CHECK(alignment_statistic(ga, gb, p) == statistic_oracle(ga, gb, p));
    }
}

TEST_CASE("optimize_alignment: trivial optima and the exhaustive oracle") {
    LabelledGraph complete(5, 1);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) complete.set_edge(i, j, 1);

    Rng rng(23);
    const Permutation sigma = random_permutation(5, rng);
    CHECK(optimize_alignment(complete, apply_permutation(complete, sigma), OptimizeSense::Max)
              .value == 10);

    // With ga complete every b-edge is counted regardless of the labelling.
    const auto half = JointEdgeDistribution::subsampling(0.5, 0.5);
    Rng sample_rng(3);
    const auto [unused, gb] = sample_pair(half, 5, sample_rng);
    CHECK(optimize_alignment(complete, gb, OptimizeSense::Min).value == gb.edge_cardinality());

    for (int rep = 0; rep < 15; ++rep) {
        Rng pair_rng(mix_seed(4242, static_cast<std::uint64_t>(rep)));
        const auto [ga, hb] = sample_pair(half, 5, pair_rng);
        const AlignmentResult max_result = optimize_alignment(ga, hb, OptimizeSense::Max);
        const AlignmentResult min_result = optimize_alignment(ga, hb, OptimizeSense::Min);

        // Definitional oracle: scan all permutations.
        int best = -1, worst = 11;
        std::uint64_t best_count = 0;
        PermutationEnumeration perms(5);
        while (auto p = perms.next()) {
            const int stat = statistic_oracle(ga, hb, *p);
            if (stat > best) {
                best = stat;
                best_count = 0;
            }
            if (stat == best) ++best_count;
            worst = std::min(worst, stat);
        }
        CHECK(max_result.value == best);
        CHECK(min_result.value == worst);
        CHECK(max_result.witness_count == best_count);
        CHECK(max_result.witnesses.size() == best_count);
        // Witnesses reproduce the value, and arrive in ascending order.
        for (const auto& w : max_result.witnesses)
            CHECK(alignment_statistic(ga, hb, w) == max_result.value);
        CHECK(std::is_sorted(max_result.witnesses.begin(), max_result.witnesses.end()));

        // The identity sits between the two optima.
        const int id_stat = alignment_statistic(ga, hb, Permutation::identity(5));
        CHECK(min_result.value <= id_stat);
        CHECK(id_stat <= max_result.value);
    }
}

TEST_CASE("matching error: direct definition and identities") {
    const auto half = JointEdgeDistribution::subsampling(0.5, 0.5);
    Rng rng(31);
    for (int rep = 0; rep < 40; ++rep) {
        Rng pair_rng(mix_seed(515, static_cast<std::uint64_t>(rep)));
        const auto [ga, gb] = sample_pair(half, 4, pair_rng);
        const Permutation p = random_permutation(4, rng);
        CHECK(matching_error(ga, gb, p) == matching_error_oracle(ga, gb, p));
        CHECK(matching_error(ga, gb, p) ==
              ga.edge_cardinality() + gb.edge_cardinality() - 2 * alignment_statistic(ga, gb, p));
    }

    const LabelledGraph g = unweighted_from_edges(4, {{1, 2}, {3, 4}});
    CHECK(matching_error(g, g, Permutation::identity(4)) == 0);

    LabelledGraph complete(4, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) complete.set_edge(i, j, 1);
    CHECK(matching_error(LabelledGraph(4, 1), complete, Permutation::identity(4)) == 6);
}

TEST_CASE("map_deanonymize equals the joint-probability argmax set") {
    const auto dist = JointEdgeDistribution::subsampling(0.5, 0.5); // ratio > 1
    for (int rep = 0; rep < 25; ++rep) {
        Rng pair_rng(mix_seed(606, static_cast<std::uint64_t>(rep)));
        const auto [ga, gb] = sample_pair(dist, 5, pair_rng);
        const StructureKey sb(gb);

        // Oracle: enumerate the labelings of sb and keep the joint-probability
        // argmax set.
        const auto labelings = labelings_oracle(sb.canonical_graph());
        double best_p = -1.0;
        std::set<LabelledGraph> argmax;
        for (const auto& cand : labelings) {
            const double p = joint_prob_oracle(ga, cand, dist);
            if (p > best_p + 1e-15) {
                best_p = p;
                argmax.clear();
            }
            if (std::abs(p - best_p) <= 1e-15) argmax.insert(cand);
        }

        const LabelledGraph picked = map_deanonymize(ga, sb, dist);
        CHECK(argmax.count(picked) == 1);
        // Tie-break: lexicographically smallest edge sequence.
        CHECK(picked == *argmax.begin());

        // The alignment-statistic argmax set coincides with the
        // joint-probability argmax set.
        const AlignmentResult opt =
            optimize_alignment(ga, sb.canonical_graph(), OptimizeSense::Max);
        std::set<LabelledGraph> stat_argmax;
        for (const auto& w : opt.witnesses)
            stat_argmax.insert(apply_permutation(sb.canonical_graph(), w.inverse()));
        CHECK(stat_argmax == argmax);
    }

    // The empty structure has a unique labeling.
    const StructureKey empty_s(LabelledGraph(4, 1));
    Rng pair_rng(9);
    const auto [ga4, unused] = sample_pair(dist, 4, pair_rng);
    CHECK(map_deanonymize(ga4, empty_s, dist) == LabelledGraph(4, 1));

    // Degenerate ratio: all labelings equally likely.
    CHECK_THROWS_AS(map_deanonymize(ga4, empty_s, independent_dist()), DegenerateModelError);
    // Zero cells break the likelihood-ratio test.
    CHECK_THROWS_AS(map_deanonymize(ga4, empty_s, JointEdgeDistribution::subsampling(0.5, 1.0)),
                    InvalidArgument);
}

TEST_CASE("map_deanonymize with ratio below one minimizes the statistic") {
    // p11 p00 < p10 p01.
    const JointEdgeDistribution anti(1, 1, {0.1, 0.4, 0.4, 0.1});
    for (int rep = 0; rep < 10; ++rep) {
        Rng pair_rng(mix_seed(707, static_cast<std::uint64_t>(rep)));
        const auto [ga, gb] = sample_pair(anti, 5, pair_rng);
        const StructureKey sb(gb);
        const LabelledGraph picked = map_deanonymize(ga, sb, anti);
        double best_p = -1.0;
        LabelledGraph best = picked;
        for (const auto& cand : labelings_oracle(sb.canonical_graph())) {
            const double p = joint_prob_oracle(ga, cand, anti);
            if (p > best_p) {
                best_p = p;
                best = cand;
            }
        }
        CHECK(joint_prob_oracle(ga, picked, anti) == doctest::Approx(best_p).epsilon(1e-12));
    }
}

TEST_CASE("expected statistic: the three plugged shapes") {
    const auto dist = JointEdgeDistribution::subsampling(0.5, 0.5);
    const double p11 = dist.p11();
    const double ea = dist.p10() + dist.p11();
    const double eb = dist.p01() + dist.p11();

    CHECK(expected_statistic(shape_of(Permutation::identity(3)), dist, 3) ==
          doctest::Approx(3.0 * p11).epsilon(1e-12));
    CHECK(expected_statistic(shape_of(Permutation::transposition(3, 0, 1)), dist, 3) ==
          doctest::Approx(p11 + 2.0 * ea * eb).epsilon(1e-12));
    CHECK(expected_statistic(shape_of(Permutation::full_cycle(3)), dist, 3) ==
          doctest::Approx(3.0 * ea * eb).epsilon(1e-12));

    CHECK_THROWS_AS(expected_statistic(PermutationShape{5, 1}, dist, 4), InvalidArgument);
    CHECK_THROWS_AS(expected_statistic(PermutationShape{1, 0}, weighted_test_dist(), 4),
                    InvalidArgument);
}

TEST_CASE("monte carlo statistic mean matches the appendix expectation") {
    const auto dist = JointEdgeDistribution::subsampling(0.5, 0.5);
    for (int n : {4, 6}) {
        const std::vector<Permutation> perms = {Permutation::identity(n),
                                                Permutation::transposition(n, 0, 1),
                                                Permutation::full_cycle(n)};
        for (std::size_t which = 0; which < perms.size(); ++which) {
            const Permutation& perm = perms[which];
            const double expected = expected_statistic(shape_of(perm), dist, n);
            std::vector<double> stats;
            stats.reserve(10000);
            for (int t = 0; t < 10000; ++t) {
                Rng rng(mix_seed(2025 + which, static_cast<std::uint64_t>(t) * 37 + n));
                const auto [ga, gb] = sample_pair(dist, n, rng);
                stats.push_back(static_cast<double>(alignment_statistic(ga, gb, perm)));
            }
            CHECK(std::abs(mean(stats) - expected) <= 3.0 * standard_error(stats));
        }
    }
}

TEST_CASE("concentration bounds: values and clamping") {
    const auto dist = JointEdgeDistribution::subsampling(0.5, 0.5);

    const auto vacuous = concentration_bounds(6, 0.0, dist);
    CHECK(vacuous.single_perm_tail == 1.0);
    CHECK(vacuous.union_tail == 1.0);

    // n = 8, delta = 1: exp(-C(8,2)/2) = exp(-14).
    const auto b8 = concentration_bounds(8, 1.0, dist);
    CHECK(b8.single_perm_tail == doctest::Approx(std::exp(-14.0)).epsilon(1e-12));
    // The union exponent 14 - 8 ln 8 is negative, so the bound clamps to 1.
    CHECK(b8.union_tail == 1.0);
    const auto b8_tight = concentration_bounds(8, 1.6, dist);
    CHECK(b8_tight.union_tail ==
          doctest::Approx(std::exp(-(28.0 * 1.28 - 8.0 * std::log(8.0)))).epsilon(1e-9));

    const auto map_bound = concentration_bounds(8, 0.5, dist);
    const double gap = std::sqrt(dist.p00() * dist.p11()) - std::sqrt(dist.p01() * dist.p10());
    CHECK(map_bound.map_failure ==
          doctest::Approx(std::min(1.0, std::exp2(-(6.0 * gap * gap - 3.0)))).epsilon(1e-9));

    CHECK_THROWS_AS(concentration_bounds(4, 0.5, weighted_test_dist()), InvalidArgument);
}

} // TEST_SUITE
