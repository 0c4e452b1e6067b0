// Monte Carlo verification of the convergence and concentration claims.
// These run longer than the unit suites; seeds are fixed so reruns are
// byte-stable.

#include <doctest.h>

#include <cmath>
#include <vector>

#include "cergraph/alignment.hpp"
#include "cergraph/model.hpp"
#include "cergraph/parallel.hpp"
#include "cergraph/stats.hpp"
#include "test_support.hpp"

using namespace cergraph;
using namespace testsupport;

TEST_SUITE("trends") {

TEST_CASE("conditional spectrum concentrates on H(A|B) as n grows") {
    // 10^4 samples per n; the mean absolute distance of the normalized
    // graph-given-structure spectrum to H(A|B) shrinks strictly.
    const auto dist = JointEdgeDistribution::subsampling(0.5, 0.5);
    const double h = dist.entropy_report().h_a_given_b;
    const std::uint64_t trials = 10000;
    std::vector<double> distances;
    for (int n : {4, 5, 6, 7, 8}) {
        const double pairs = static_cast<double>(LabelledGraph::pair_count(n));
        std::vector<double> values(trials);
        parallel_trials(trials, 0, [&](std::uint64_t t) {
            Rng rng(mix_seed(mix_seed(1001, static_cast<std::uint64_t>(n)), t));
            auto [ga, gb] = sample_pair(dist, n, rng);
            const LogProb cond = log_conditional(
                SourceObject{ga}, SourceObject{StructureKey(gb)},
                SourceVariant::GraphGivenStructure, dist);
            values[t] = std::abs(-cond.log2_value() / pairs - h);
        });
        distances.push_back(mean(values));
    }
    for (std::size_t i = 0; i + 1 < distances.size(); ++i)
        CHECK(distances[i + 1] < distances[i]);
}

TEST_CASE("permutation-maximum event frequency stays under the n! union bound") {
    const auto dist = JointEdgeDistribution::subsampling(0.5, 0.5);
    const std::uint64_t trials = 10000;
    for (int n : {4, 5, 6}) {
        const double pairs = static_cast<double>(LabelledGraph::pair_count(n));
        for (double delta : {0.5, 1.0}) {
            std::vector<double> hits(trials);
            parallel_trials(trials, 0, [&](std::uint64_t t) {
                Rng rng(mix_seed(mix_seed(2002, static_cast<std::uint64_t>(n)), t));
                auto [ga, gb] = sample_pair(dist, n, rng);
                const double mx = max_perm_log_joint(ga, gb, dist).value.log2_value();
                const double id = log_joint_graph_prob(ga, gb, dist).log2_value();
                hits[t] = mx > pairs * delta + id ? 1.0 : 0.0;
            });
            const double bound = std::min(
                1.0, static_cast<double>(factorial(n)) * std::exp2(-pairs * delta));
            CHECK(mean(hits) <= bound);
        }
    }
}

TEST_CASE("identity joint spectrum obeys the hoeffding tail") {
    const auto dist = JointEdgeDistribution::subsampling(0.5, 0.5);
    const double h_ab = dist.entropy_report().h_ab;
    const double lc = std::log2(dist.min_support_prob());
    const std::uint64_t trials = 10000;
    for (int n : {4, 6, 8}) {
        const double pairs = static_cast<double>(LabelledGraph::pair_count(n));
        for (double delta : {0.5, 1.0}) {
            std::vector<double> hits(trials);
            parallel_trials(trials, 0, [&](std::uint64_t t) {
                Rng rng(mix_seed(mix_seed(3003, static_cast<std::uint64_t>(n)), t));
                auto [ga, gb] = sample_pair(dist, n, rng);
                const double x = -log_joint_graph_prob(ga, gb, dist).log2_value() / pairs;
                hits[t] = std::abs(x - h_ab) > delta ? 1.0 : 0.0;
            });
            const double bound = std::exp2(-2.0 * delta * delta * pairs / (lc * lc));
            CHECK(mean(hits) <= bound);
        }
    }
}

TEST_CASE("optimized alignment density approaches p11 in distribution") {
    const auto dist = JointEdgeDistribution::subsampling(0.5, 0.5); // ratio > 1
    const std::uint64_t trials = 1000;
    std::vector<double> medians;
    for (int n : {4, 5, 6, 7, 8}) {
        const double pairs = static_cast<double>(LabelledGraph::pair_count(n));
        std::vector<double> deviations(trials);
        parallel_trials(trials, 0, [&](std::uint64_t t) {
            Rng rng(mix_seed(mix_seed(4004, static_cast<std::uint64_t>(n)), t));
            auto [ga, gb] = sample_pair(dist, n, rng);
            const auto opt = optimize_alignment(ga, gb, OptimizeSense::Max);
            deviations[t] = std::abs(static_cast<double>(opt.value) / pairs - dist.p11());
        });
        medians.push_back(median(deviations));
    }
    // Non-increasing throughout (adjacent grids can tie exactly), strictly
    // smaller across the whole range.
    for (std::size_t i = 0; i + 1 < medians.size(); ++i)
        CHECK(medians[i + 1] <= medians[i]);
    CHECK(medians.back() < medians.front());
}

// The asymptotic claim runs the other way at desk scale: with 21 or fewer
// vertex pairs the n! alignment candidates outgrow the per-pair correlation
// advantage, and the identity loses the exact maximum more often as n grows
// from 4 to 7, not less. Kept as stated and marked expected-to-fail; the
// measured frequencies are asserted in the companion case below.
TEST_CASE("identity attains the alignment maximum more often as n grows"
          * doctest::may_fail()) {
    const auto dist = JointEdgeDistribution::subsampling(0.5, 0.9);
    const std::uint64_t trials = 1000;
    double prev = 1.0;
    for (int n : {4, 5, 6, 7}) {
        std::vector<double> fails(trials);
        parallel_trials(trials, 0, [&](std::uint64_t t) {
            Rng rng(mix_seed(mix_seed(5005, static_cast<std::uint64_t>(n)), t));
            auto [ga, gb] = sample_pair(dist, n, rng);
            const int id_stat = alignment_statistic(ga, gb, Permutation::identity(n));
            const auto opt = optimize_alignment(ga, gb, OptimizeSense::Max);
            fails[t] = id_stat != opt.value ? 1.0 : 0.0;
        });
        const double freq = mean(fails);
        CHECK(freq <= prev);
        prev = freq;
    }
}

TEST_CASE("identity-failure frequency stays small where the exponential bound bites") {
    // The quantitative content behind the previous case: failures remain a
    // small-probability event at every desk-scale n even though their
    // frequency is not yet monotone.
    const auto dist = JointEdgeDistribution::subsampling(0.5, 0.9);
    const std::uint64_t trials = 1000;
    for (int n : {4, 5, 6, 7}) {
        std::vector<double> fails(trials);
        parallel_trials(trials, 0, [&](std::uint64_t t) {
            Rng rng(mix_seed(mix_seed(5005, static_cast<std::uint64_t>(n)), t));
            auto [ga, gb] = sample_pair(dist, n, rng);
            const int id_stat = alignment_statistic(ga, gb, Permutation::identity(n));
            const auto opt = optimize_alignment(ga, gb, OptimizeSense::Max);
            fails[t] = id_stat != opt.value ? 1.0 : 0.0;
        });
        CHECK(mean(fails) < 0.2);
    }
}

} // TEST_SUITE
