#include <benchmark/benchmark.h>

#include "cergraph/alignment.hpp"
#include "cergraph/codec.hpp"
#include "cergraph/model.hpp"
#include "cergraph/structure.hpp"

using namespace cergraph;

namespace {

std::pair<LabelledGraph, LabelledGraph> fixture_pair(int n) {
    Rng rng(4 + static_cast<std::uint64_t>(n));
    return sample_pair(JointEdgeDistribution::subsampling(0.5, 0.5), n, rng);
}

void BM_Canonicalize(benchmark::State& state) {
    const auto [ga, gb] = fixture_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(StructureKey(ga));
    }
}
BENCHMARK(BM_Canonicalize)->Arg(5)->Arg(6)->Arg(7)->Arg(8);

void BM_PermutationSum(benchmark::State& state) {
    const auto dist = JointEdgeDistribution::subsampling(0.5, 0.5);
    const auto [ga, gb] = fixture_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(permutation_sum_log_joint(ga, gb, dist));
    }
}
BENCHMARK(BM_PermutationSum)->Arg(5)->Arg(6)->Arg(7)->Arg(8);

void BM_MaxPermLogJoint(benchmark::State& state) {
    const auto dist = JointEdgeDistribution::subsampling(0.5, 0.5);
    const auto [ga, gb] = fixture_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_perm_log_joint(ga, gb, dist));
    }
}
BENCHMARK(BM_MaxPermLogJoint)->Arg(5)->Arg(6)->Arg(7)->Arg(8);

void BM_OptimizeAlignment(benchmark::State& state) {
    const auto [ga, gb] = fixture_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_alignment(ga, gb, OptimizeSense::Max));
    }
}
BENCHMARK(BM_OptimizeAlignment)->Arg(5)->Arg(6)->Arg(7)->Arg(8);

void BM_DecodeGraphGivenGraph(benchmark::State& state) {
    const auto dist = JointEdgeDistribution::subsampling(0.5, 0.5);
    const int n = static_cast<int>(state.range(0));
    const auto [ga, gb] = fixture_pair(n);
    const CodecConfig cfg{n, dist, SourceVariant::GraphGivenGraph,
                          dist.entropy_report().h_a_given_b + 1.0, 0.5, 17};
    const auto bin = encode(SourceObject{ga}, cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode(bin, SourceObject{gb}, cfg));
    }
}
BENCHMARK(BM_DecodeGraphGivenGraph)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
