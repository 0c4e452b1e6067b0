#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cergraph/enumerate.hpp"
#include "cergraph/errors.hpp"
#include "cergraph/experiments.hpp"
#include "cergraph/model.hpp"
#include "test_support.hpp"

using namespace cergraph;
using namespace testsupport;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (line.size() && line.back() == ',') cells.push_back("");
        rows.push_back(std::move(cells));
    }
    return rows;
}

ExperimentSpec basic_spec(ExperimentKind kind) {
    ExperimentSpec spec;
    spec.kind = kind;
    spec.dist = JointEdgeDistribution::subsampling(0.5, 0.5);
    spec.n_list = {3, 4};
    spec.trials = 200;
    spec.seed = 5;
    spec.workers = 1;
    return spec;
}

} // namespace

TEST_SUITE("experiments") {

TEST_CASE("spec loading and validation") {
    const char* good = R"({
        "kind": "convergence-sweep",
        "model": {"model": "subsampling", "p": 0.5, "gamma": 0.5},
        "variant": "graph-given-structure",
        "statistic": "conditional",
        "n_list": [4, 5, 6],
        "trials": 100,
        "seed": 7,
        "output": "out.csv"
    })";
    const ExperimentSpec spec = load_experiment_spec_text(good);
    CHECK(spec.kind == ExperimentKind::ConvergenceSweep);
    CHECK(spec.n_list == std::vector<int>{4, 5, 6});
    CHECK(spec.trials == 100);
    CHECK(spec.output == "out.csv");
    CHECK(spec.variant == SourceVariant::GraphGivenStructure);

    CHECK_THROWS_AS(load_experiment_spec_text("{"), InvalidArgument);
    CHECK_THROWS_AS(load_experiment_spec_text(R"({"kind":"unknown"})"), InvalidArgument);
    // Missing model.
    CHECK_THROWS_AS(load_experiment_spec_text(R"({"kind":"sandwich-check","n_list":[3]})"),
                    InvalidArgument);
    // n_list not strictly increasing.
    CHECK_THROWS_AS(load_experiment_spec_text(
                        R"({"kind":"sandwich-check",
                            "model":{"model":"subsampling","p":0.5,"gamma":0.5},
                            "n_list":[4,4]})"),
                    InvalidArgument);
    // trials below 1.
    CHECK_THROWS_AS(load_experiment_spec_text(
                        R"({"kind":"sandwich-check",
                            "model":{"model":"subsampling","p":0.5,"gamma":0.5},
                            "n_list":[3],"trials":0})"),
                    InvalidArgument);
}

TEST_CASE("experiments are pure functions of (spec, seed)") {
    auto spec = basic_spec(ExperimentKind::ConvergenceSweep);
    spec.n_list = {3, 4};
    spec.statistic = "conditional";
    spec.variant = SourceVariant::GraphGivenGraph;
    std::ostringstream first, second;
    run_experiment(spec, first);
    run_experiment(spec, second);
    CHECK(first.str() == second.str());
    CHECK(!first.str().empty());

    auto rates = basic_spec(ExperimentKind::RateSweep);
    rates.variant = SourceVariant::GraphGivenGraph;
    rates.n_list = {3};
    rates.rates = {0.5, 1.0};
    rates.trials = 100;
    rates.codebook_seeds = 2;
    std::ostringstream r1, r2;
    run_experiment(rates, r1);
    run_experiment(rates, r2);
    CHECK(r1.str() == r2.str());
}

TEST_CASE("convergence sweep: graph-given-graph reduces to the i.i.d. mean") {
    auto spec = basic_spec(ExperimentKind::ConvergenceSweep);
    spec.variant = SourceVariant::GraphGivenGraph;
    spec.n_list = {5};
    spec.trials = 4000;
    std::ostringstream out;
    run_convergence_sweep(spec, out);

    const auto rows = parse_csv(out.str());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][0] == "statistic");
    const double mean_val = std::stod(rows[1][4]);
    const double reference = std::stod(rows[1][8]);
    CHECK(reference ==
          doctest::Approx(spec.dist->entropy_report().h_a_given_b).epsilon(1e-9));
    // LLN: the empirical mean sits within 3 standard errors of H(A|B).
    // Per-pair self-information has sd < 1.1 bits; /sqrt(pairs * trials).
    const double se_cap = 1.1 / std::sqrt(10.0 * 4000.0);
    CHECK(std::abs(mean_val - reference) <= 3.0 * se_cap);
}

TEST_CASE("convergence sweep: joint-max tail columns respect the union+hoeffding bound") {
    auto spec = basic_spec(ExperimentKind::ConvergenceSweep);
    spec.statistic = "joint-max";
    spec.n_list = {6};
    spec.trials = 1500;
    spec.tail_delta = 1.0;
    std::ostringstream out;
    run_convergence_sweep(spec, out);
    const auto rows = parse_csv(out.str());
    REQUIRE(rows.size() == 2);
    const double tail_freq = std::stod(rows[1][10]);
    const double tail_bound = std::stod(rows[1][11]);
    CHECK(tail_freq <= tail_bound);
}

TEST_CASE("sandwich check: all inequalities hold and edge cases collapse") {
    auto spec = basic_spec(ExperimentKind::SandwichCheck);
    std::ostringstream out;
    const auto result = run_sandwich_check(spec, out);
    CHECK(result.checks_passed);

    // Weighted alphabet at n=3.
    const auto weighted = weighted_test_dist();
    const auto wr = sandwich_report(3, weighted);
    CHECK(wr.all_hold);

    // gamma = 1: Ga = Gb almost surely.
    const auto det = sandwich_report(3, JointEdgeDistribution::subsampling(0.5, 1.0));
    CHECK(det.h_ga_gb == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(det.h_ga_sb == doctest::Approx(det.h_gb_sb).epsilon(1e-9));

    // H(Gb|Sb) = log2(n!) - sum_s P(s) log2|Aut(s)|.
    const auto half = JointEdgeDistribution::subsampling(0.5, 0.5);
    for (int n : {3, 4}) {
        double aut_term = 0.0;
        StructureEnumeration structures(n, 1);
        while (auto s = structures.next()) {
            const double p = log_structure_prob(*s, half, MarginalSide::B).to_prob();
            aut_term += p * std::log2(static_cast<double>(
                                automorphism_count(s->canonical_graph())));
        }
        const auto r = sandwich_report(n, half);
        CHECK(r.h_gb_sb ==
              doctest::Approx(std::log2(static_cast<double>(factorial(n))) - aut_term)
                  .epsilon(1e-9));
    }
}

TEST_CASE("structural entropy check: exact value and the factorial gap") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::StructuralEntropyCheck;
    spec.dist = JointEdgeDistribution::subsampling(1.0, 0.5); // q = 1/2 marginal
    spec.n_list = {3, 4, 5};
    spec.workers = 1;
    std::ostringstream out;
    const auto result = run_structural_entropy_check(spec, out);
    CHECK(result.checks_passed);

    const auto rows = parse_csv(out.str());
    REQUIRE(rows.size() == 4);
    // n=3 row: exact H(S) of the fair-coin model.
    CHECK(std::stod(rows[1][2]) == doctest::Approx(1.8112781244591328).epsilon(1e-9));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double h_struct = std::stod(rows[i][2]);
        const double h_graph = std::stod(rows[i][3]);
        const double gap = std::stod(rows[i][6]);
        const double log2_nfact = std::stod(rows[i][7]);
        CHECK(h_struct <= h_graph + 1e-9);
        CHECK(gap <= log2_nfact + 1e-9);
    }
}

TEST_CASE("bound comparison: the paper's strictness point and parameter checks") {
    const NikpeyBoundInputs inputs{0.5, 1.0, 0.25};
    const auto rec = run_bound_comparison(inputs);
    CHECK(rec.h_cond == 0.0);
    CHECK(rec.prior_bound > 0.0);
    // h2(p*gamma) - delta = 1 - (3/8) (s/(s+2))^2 at p = 1/2, gamma = 1.
    const double s = inputs.s();
    CHECK(rec.prior_bound ==
          doctest::Approx(1.0 - (3.0 / 8.0) * (s / (s + 2.0)) * (s / (s + 2.0)))
              .epsilon(1e-12));

    // gamma = 0: both graphs empty almost surely.
    CHECK(run_bound_comparison(NikpeyBoundInputs{0.3, 0.0, 0.2}).h_cond == 0.0);

    // delta_prior positive on the open interior.
    CHECK(NikpeyBoundInputs{0.4, 0.6, 0.2}.delta_prior() > 0.0);

    CHECK_THROWS_AS(run_bound_comparison(NikpeyBoundInputs{0.5, 0.5, 0.6}), InvalidArgument);
    CHECK_THROWS_AS(run_bound_comparison(NikpeyBoundInputs{1.0, 0.5, 0.1}), InvalidArgument);

    ExperimentSpec spec;
    spec.kind = ExperimentKind::BoundComparison;
    spec.p_list = {0.25, 0.5, 0.75};
    spec.gamma_list = {0.2, 0.5, 0.8, 1.0};
    spec.epsilon = 0.2;
    std::ostringstream out;
    run_bound_comparison_grid(spec, out);
    const auto rows = parse_csv(out.str());
    CHECK(rows.size() == 1 + 12); // header + the 20-point-style grid (3x4 here)
}

TEST_CASE("alignment concentration runner emits self-consistent rows") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::AlignmentConcentration;
    spec.dist = JointEdgeDistribution::subsampling(0.5, 0.5);
    spec.n_list = {4};
    spec.trials = 3000;
    spec.seed = 99;
    spec.workers = 1;
    spec.deltas = {0.5, 1.0};
    std::ostringstream out;
    run_alignment_concentration(spec, out);
    const auto rows = parse_csv(out.str());
    REQUIRE(rows.size() == 1 + 3 * 2); // three shapes, two deltas each
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double mean_stat = std::stod(rows[i][3]);
        const double expected = std::stod(rows[i][4]);
        const double se = std::stod(rows[i][5]);
        const double tail_freq = std::stod(rows[i][7]);
        const double tail_bound = std::stod(rows[i][8]);
        CHECK(std::abs(mean_stat - expected) <= 3.0 * se);
        CHECK(tail_freq <= tail_bound + 1e-12);
    }
}

TEST_CASE("rate sweep delegates to the codec and keeps the CSV contract") {
    auto spec = basic_spec(ExperimentKind::RateSweep);
    spec.variant = SourceVariant::GraphGivenGraph;
    spec.n_list = {3};
    spec.rates = {0.4, 1.2};
    spec.trials = 150;
    spec.codebook_seeds = 2;
    std::ostringstream out;
    run_rate_sweep(spec, out);
    const auto rows = parse_csv(out.str());
    REQUIRE(rows.size() == 1 + 2 * 2);
    CHECK(rows[0][0] == "variant");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i][0] == "graph-given-graph");
        CHECK(std::stoull(rows[i][5]) == 150);
        const double errors = std::stod(rows[i][6]);
        CHECK(errors <= 150.0);
    }
}

TEST_CASE("exact quantities agree across computation routes") {
    const auto half = JointEdgeDistribution::subsampling(0.5, 0.5);
    const double via_report = half.entropy_report().h_a_given_b;
    const double via_closed_form = subsampling_conditional_entropy(0.5, 0.5);
    const double via_enumeration =
        exact_conditional_entropy(3, half, SourceVariant::GraphGivenGraph) / 3.0;
    CHECK(via_report == doctest::Approx(via_closed_form).epsilon(1e-9));
    CHECK(via_report == doctest::Approx(via_enumeration).epsilon(1e-9));
}

} // TEST_SUITE
