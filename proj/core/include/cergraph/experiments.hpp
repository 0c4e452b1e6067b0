#ifndef CERGRAPH_EXPERIMENTS_HPP
#define CERGRAPH_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cergraph/budget.hpp"
#include "cergraph/distribution.hpp"

namespace cergraph {

enum class ExperimentKind {
    ConvergenceSweep,
    SandwichCheck,
    RateSweep,
    BoundComparison,
    StructuralEntropyCheck,
    AlignmentConcentration,
};

std::string_view to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(std::string_view name);

// Declarative experiment description, loadable from JSON. Every experiment
// is a pure function of (spec, seed): re-running emits byte-identical CSV.
struct ExperimentSpec {
    ExperimentKind kind;
    std::optional<JointEdgeDistribution> dist; // required except bound-comparison
    std::vector<int> n_list;                   // strictly increasing
    std::uint64_t trials = 1;
    std::uint64_t seed = 12345;
    std::string output; // CSV path; empty means stdout

    // convergence-sweep
    SourceVariant variant = SourceVariant::GraphGivenStructure;
    std::string statistic = "conditional"; // "conditional" | "joint-max"
    std::optional<double> tail_delta;

    // rate-sweep
    std::vector<double> rates;
    double delta = 0.5;
    int codebook_seeds = 1;

    // alignment-concentration
    std::vector<std::string> shapes; // "identity" | "transposition" | "cycle"
    std::vector<double> deltas;

    // bound-comparison
    std::vector<double> p_list;
    std::vector<double> gamma_list;
    double epsilon = 0.25;

    // execution knobs, not part of the JSON document
    int workers = 0;
};

ExperimentSpec load_experiment_spec_text(std::string_view json_text);
ExperimentSpec load_experiment_spec_file(const std::string& path);

// Inputs and derived quantities of the prior achievability bound
// R* <= h2(p*gamma) - delta for the subsampling model.
struct NikpeyBoundInputs {
    double p;
    double gamma;
    double epsilon; // in (0, 1-p)

    double sigma2() const; // (p*gamma)^2 * (1 - (p*gamma)^2)
    double s() const;      // min{1, (1-eps-p) / ((1-eps+p)(1-(p*gamma)^2))}
    double delta_prior() const; // 2 s^2 sigma^2 / (s+2)^2
};

struct BoundComparisonRecord {
    double prior_bound; // h2(p*gamma) - delta_prior
    double h_cond;      // H(A|B) of the subsampling model
    double gap;         // prior_bound - h_cond
};

BoundComparisonRecord run_bound_comparison(const NikpeyBoundInputs& inputs);

// Exact entropy quantities and the Lemma-1 sandwich inequalities for one n.
struct SandwichCheckRow {
    std::string name;
    double lhs;
    double rhs;
    double margin; // rhs - lhs; holds iff margin >= -1e-9
    bool holds;
};

struct SandwichReport {
    int n;
    double h_ga_gb, h_ga_sb, h_sa_gb, h_sa_sb; // exact conditional entropies, bits
    double h_gb_sb, h_ga_sa;                   // graph-given-own-structure
    double h_struct_a, h_struct_b;             // exact structure entropies
    std::vector<SandwichCheckRow> checks;
    bool all_hold;
};

SandwichReport sandwich_report(int n, const JointEdgeDistribution& dist,
                               const Budget& budget = default_budget());

struct ExperimentRunResult {
    bool checks_passed = true;
    std::string summary;
};

// CSV headers per kind are fixed; see the README.
ExperimentRunResult run_convergence_sweep(const ExperimentSpec& spec, std::ostream& out);
ExperimentRunResult run_sandwich_check(const ExperimentSpec& spec, std::ostream& out);
ExperimentRunResult run_rate_sweep(const ExperimentSpec& spec, std::ostream& out);
ExperimentRunResult run_bound_comparison_grid(const ExperimentSpec& spec, std::ostream& out);
ExperimentRunResult run_structural_entropy_check(const ExperimentSpec& spec, std::ostream& out);
ExperimentRunResult run_alignment_concentration(const ExperimentSpec& spec, std::ostream& out);

ExperimentRunResult run_experiment(const ExperimentSpec& spec, std::ostream& out);

} // namespace cergraph

#endif
