#include "cergraph/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cergraph/alignment.hpp"
#include "cergraph/codec.hpp"
#include "cergraph/enumerate.hpp"
#include "cergraph/errors.hpp"
#include "cergraph/format.hpp"
#include "cergraph/model.hpp"
#include "cergraph/parallel.hpp"
#include "cergraph/stats.hpp"

namespace cergraph {

namespace {

constexpr double kExactTol = 1e-9;

void require_strictly_increasing(const std::vector<int>& ns) {
    if (ns.empty()) throw InvalidArgument("experiment spec: n_list must be nonempty");
    for (std::size_t i = 0; i + 1 < ns.size(); ++i)
        if (ns[i] >= ns[i + 1])
            throw InvalidArgument("experiment spec: n_list must be strictly increasing");
    if (ns.front() < 1) throw InvalidArgument("experiment spec: n must be >= 1");
}

const JointEdgeDistribution& require_dist(const ExperimentSpec& spec) {
    if (!spec.dist) throw InvalidArgument("experiment spec: missing model distribution");
    return *spec.dist;
}

Permutation shape_permutation(const std::string& name, int n) {
    if (name == "identity") return Permutation::identity(n);
    if (name == "transposition") {
        if (n < 2) throw InvalidArgument("transposition shape needs n >= 2");
        return Permutation::transposition(n, 0, 1);
    }
    if (name == "cycle") return Permutation::full_cycle(n);
    throw InvalidArgument("unknown permutation shape: " + name);
}

} // namespace

std::string_view to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::ConvergenceSweep: return "convergence-sweep";
        case ExperimentKind::SandwichCheck: return "sandwich-check";
        case ExperimentKind::RateSweep: return "rate-sweep";
        case ExperimentKind::BoundComparison: return "bound-comparison";
        case ExperimentKind::StructuralEntropyCheck: return "structural-entropy-check";
        case ExperimentKind::AlignmentConcentration: return "alignment-concentration";
    }
    throw InvalidArgument("unknown experiment kind");
}

ExperimentKind experiment_kind_from_string(std::string_view name) {
    if (name == "convergence-sweep") return ExperimentKind::ConvergenceSweep;
    if (name == "sandwich-check") return ExperimentKind::SandwichCheck;
    if (name == "rate-sweep") return ExperimentKind::RateSweep;
    if (name == "bound-comparison") return ExperimentKind::BoundComparison;
    if (name == "structural-entropy-check") return ExperimentKind::StructuralEntropyCheck;
    if (name == "alignment-concentration") return ExperimentKind::AlignmentConcentration;
    throw InvalidArgument("unknown experiment kind: " + std::string(name));
}

ExperimentSpec load_experiment_spec_text(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("experiment spec JSON: ") + e.what());
    }

    ExperimentSpec spec;
    try {
        spec.kind = experiment_kind_from_string(doc.at("kind").get<std::string>());
        if (doc.contains("model"))
            spec.dist = JointEdgeDistribution::from_json_text(doc.at("model").dump());
        if (doc.contains("n_list")) spec.n_list = doc.at("n_list").get<std::vector<int>>();
        if (doc.contains("trials")) spec.trials = doc.at("trials").get<std::uint64_t>();
        if (doc.contains("seed")) spec.seed = doc.at("seed").get<std::uint64_t>();
        if (doc.contains("output")) spec.output = doc.at("output").get<std::string>();
        if (doc.contains("variant"))
            spec.variant = variant_from_string(doc.at("variant").get<std::string>());
        if (doc.contains("statistic")) spec.statistic = doc.at("statistic").get<std::string>();
        if (doc.contains("tail_delta")) spec.tail_delta = doc.at("tail_delta").get<double>();
        if (doc.contains("rates")) spec.rates = doc.at("rates").get<std::vector<double>>();
        if (doc.contains("delta")) spec.delta = doc.at("delta").get<double>();
        if (doc.contains("codebook_seeds"))
            spec.codebook_seeds = doc.at("codebook_seeds").get<int>();
        if (doc.contains("shapes"))
            spec.shapes = doc.at("shapes").get<std::vector<std::string>>();
        if (doc.contains("deltas")) spec.deltas = doc.at("deltas").get<std::vector<double>>();
        if (doc.contains("p_list")) spec.p_list = doc.at("p_list").get<std::vector<double>>();
        if (doc.contains("gamma_list"))
            spec.gamma_list = doc.at("gamma_list").get<std::vector<double>>();
        if (doc.contains("epsilon")) spec.epsilon = doc.at("epsilon").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("experiment spec JSON: ") + e.what());
    }

    if (spec.kind != ExperimentKind::BoundComparison) {
        require_dist(spec);
        require_strictly_increasing(spec.n_list);
    }
    if (spec.trials < 1) throw InvalidArgument("experiment spec: trials must be >= 1");
    if (spec.statistic != "conditional" && spec.statistic != "joint-max")
        throw InvalidArgument("experiment spec: statistic must be conditional or joint-max");
    return spec;
}

ExperimentSpec load_experiment_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open experiment spec: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_experiment_spec_text(buf.str());
}

double NikpeyBoundInputs::sigma2() const {
    const double pg = p * gamma;
    return pg * pg * (1.0 - pg * pg);
}

double NikpeyBoundInputs::s() const {
    const double pg = p * gamma;
    const double denom = (1.0 - epsilon + p) * (1.0 - pg * pg);
    if (denom <= 0.0) return 1.0; // p*gamma = 1: the ratio diverges
    return std::min(1.0, (1.0 - epsilon - p) / denom);
}

double NikpeyBoundInputs::delta_prior() const {
    const double sv = s();
    return 2.0 * sv * sv * sigma2() / ((sv + 2.0) * (sv + 2.0));
}

BoundComparisonRecord run_bound_comparison(const NikpeyBoundInputs& inputs) {
    if (inputs.p < 0.0 || inputs.p >= 1.0)
        throw InvalidArgument("bound comparison: p must lie in [0, 1)");
    if (inputs.gamma < 0.0 || inputs.gamma > 1.0)
        throw InvalidArgument("bound comparison: gamma must lie in [0, 1]");
    if (!(inputs.epsilon > 0.0) || !(inputs.epsilon < 1.0 - inputs.p))
        throw InvalidArgument("bound comparison: epsilon must lie in (0, 1-p)");
    BoundComparisonRecord rec{};
    rec.prior_bound = binary_entropy(inputs.p * inputs.gamma) - inputs.delta_prior();
    rec.h_cond = subsampling_conditional_entropy(inputs.p, inputs.gamma);
    rec.gap = rec.prior_bound - rec.h_cond;
    return rec;
}

SandwichReport sandwich_report(int n, const JointEdgeDistribution& dist, const Budget& budget) {
    SandwichReport r{};
    r.n = n;
    r.h_ga_gb = exact_conditional_entropy(n, dist, SourceVariant::GraphGivenGraph, budget);
    r.h_ga_sb = exact_conditional_entropy(n, dist, SourceVariant::GraphGivenStructure, budget);
    r.h_sa_gb = exact_conditional_entropy(n, dist, SourceVariant::StructureGivenGraph, budget);
    r.h_sa_sb = exact_conditional_entropy(n, dist, SourceVariant::StructureGivenStructure, budget);
    r.h_struct_a = exact_structure_entropy(n, dist, MarginalSide::A, budget);
    r.h_struct_b = exact_structure_entropy(n, dist, MarginalSide::B, budget);

    const double pairs = static_cast<double>(LabelledGraph::pair_count(n));
    const EntropyReport per_pair = dist.entropy_report();
    r.h_ga_sa = pairs * per_pair.h_a - r.h_struct_a;
    r.h_gb_sb = pairs * per_pair.h_b - r.h_struct_b;

    const auto check = [&r](std::string name, double lhs, double rhs) {
        const double margin = rhs - lhs;
        r.checks.push_back(SandwichCheckRow{std::move(name), lhs, rhs, margin,
                                            margin >= -kExactTol});
    };
    check("H(Ga|Gb)<=H(Ga|Sb)", r.h_ga_gb, r.h_ga_sb);
    check("H(Ga|Sb)<=H(Ga|Gb)+H(Gb|Sb)", r.h_ga_sb, r.h_ga_gb + r.h_gb_sb);
    check("H(Ga|Gb)-H(Ga|Sa)<=H(Sa|Gb)", r.h_ga_gb - r.h_ga_sa, r.h_sa_gb);
    check("H(Sa|Gb)<=H(Ga|Gb)", r.h_sa_gb, r.h_ga_gb);
    check("H(Sa|Gb)<=H(Sa|Sb)", r.h_sa_gb, r.h_sa_sb);
    check("H(Sa|Sb)<=H(Ga|Sb)", r.h_sa_sb, r.h_ga_sb);

    r.all_hold = true;
    for (const auto& row : r.checks) r.all_hold = r.all_hold && row.holds;
    return r;
}

ExperimentRunResult run_convergence_sweep(const ExperimentSpec& spec, std::ostream& out) {
    const JointEdgeDistribution& dist = require_dist(spec);
    const bool joint_max = spec.statistic == "joint-max";
    const EntropyReport per_pair = dist.entropy_report();
    const double reference = joint_max ? per_pair.h_ab : per_pair.h_a_given_b;

    out << "statistic,variant,n,trials,mean,median,q05,q95,reference,"
           "tail_delta,tail_freq,tail_bound\n";
    for (int n : spec.n_list) {
        const double pairs = static_cast<double>(LabelledGraph::pair_count(n));
        std::vector<double> values(spec.trials);
        const std::uint64_t stream = mix_seed(spec.seed, static_cast<std::uint64_t>(n));
        parallel_trials(spec.trials, spec.workers, [&](std::uint64_t i) {
            Rng rng(mix_seed(stream, i));
            auto [ga, gb] = sample_pair(dist, n, rng);
            LogProb lp = LogProb::one();
            if (joint_max) {
                lp = max_perm_log_joint(ga, gb, dist).value;
            } else {
                const SourceObject ua = make_source_object(ga, compressed_kind(spec.variant));
                const SourceObject ub = make_source_object(gb, side_kind(spec.variant));
                lp = log_conditional(ua, ub, spec.variant, dist);
            }
            values[i] = pairs > 0.0 ? -lp.log2_value() / pairs : 0.0;
        });

        out << spec.statistic << ',' << (joint_max ? "" : to_string(spec.variant)) << ',' << n
            << ',' << spec.trials << ',' << format_g(mean(values)) << ','
            << format_g(median(values)) << ',' << format_g(quantile(values, 0.05)) << ','
            << format_g(quantile(values, 0.95)) << ',' << format_g(reference) << ',';
        if (spec.tail_delta) {
            const double d = *spec.tail_delta;
            std::uint64_t exceed = 0;
            for (double x : values)
                if (std::abs(x - reference) > 2.0 * d) ++exceed;
            const double freq =
                static_cast<double>(exceed) / static_cast<double>(spec.trials);
            out << format_g(d) << ',' << format_g(freq) << ',';
            if (joint_max) {
                // 2^-(C(n,2)d - n log2 n) + 2^-(2 d^2 C(n,2) / (log2 C)^2)
                const double lc = std::log2(dist.min_support_prob());
                const double t1 = std::exp2(-(pairs * d - n * std::log2(double(n))));
                const double t2 = std::exp2(-2.0 * d * d * pairs / (lc * lc));
                out << format_g(std::min(1.0, t1 + t2));
            }
            out << '\n';
        } else {
            out << ",,\n";
        }
    }
    return ExperimentRunResult{true, "convergence sweep complete"};
}

ExperimentRunResult run_sandwich_check(const ExperimentSpec& spec, std::ostream& out) {
    const JointEdgeDistribution& dist = require_dist(spec);
    out << "n,name,value\n";
    bool all = true;
    for (int n : spec.n_list) {
        const SandwichReport r = sandwich_report(n, dist);
        const auto quantity = [&out, n](const char* name, double v) {
            out << n << ',' << name << ',' << format_g(v) << '\n';
        };
        quantity("H(Ga|Gb)", r.h_ga_gb);
        quantity("H(Ga|Sb)", r.h_ga_sb);
        quantity("H(Sa|Gb)", r.h_sa_gb);
        quantity("H(Sa|Sb)", r.h_sa_sb);
        quantity("H(Gb|Sb)", r.h_gb_sb);
        quantity("H(Ga|Sa)", r.h_ga_sa);
        quantity("H(Sa)", r.h_struct_a);
        quantity("H(Sb)", r.h_struct_b);
        for (const auto& row : r.checks) {
            out << n << ",margin:" << row.name << ',' << format_g(row.margin) << '\n';
            all = all && row.holds;
        }
    }
    return ExperimentRunResult{all, all ? "all sandwich inequalities hold"
                                        : "sandwich inequality violated"};
}

ExperimentRunResult run_rate_sweep(const ExperimentSpec& spec, std::ostream& out) {
    const JointEdgeDistribution& dist = require_dist(spec);
    if (spec.rates.empty()) throw InvalidArgument("rate sweep: rates must be nonempty");
    if (spec.codebook_seeds < 1)
        throw InvalidArgument("rate sweep: codebook_seeds must be >= 1");
    write_simulation_csv_header(out);
    std::uint64_t cell = 0;
    for (int n : spec.n_list) {
        for (double rate : spec.rates) {
            for (int cs = 0; cs < spec.codebook_seeds; ++cs, ++cell) {
                CodecConfig config{n,    dist,       spec.variant,
                                   rate, spec.delta, mix_seed(spec.seed, 2 * cell)};
                const SimulationReport report = simulate_error_rate(
                    config, spec.trials, mix_seed(spec.seed, 2 * cell + 1), spec.workers);
                write_simulation_csv_row(out, config, report);
            }
        }
    }
    return ExperimentRunResult{true, "rate sweep complete"};
}

ExperimentRunResult run_bound_comparison_grid(const ExperimentSpec& spec, std::ostream& out) {
    if (spec.p_list.empty() || spec.gamma_list.empty())
        throw InvalidArgument("bound comparison: p_list and gamma_list must be nonempty");
    out << "p,gamma,epsilon,sigma2,s,delta_prior,prior_bound,h_cond,gap\n";
    for (double p : spec.p_list) {
        for (double gamma : spec.gamma_list) {
            const NikpeyBoundInputs inputs{p, gamma, spec.epsilon};
            const BoundComparisonRecord rec = run_bound_comparison(inputs);
            out << format_g(p) << ',' << format_g(gamma) << ',' << format_g(spec.epsilon) << ','
                << format_g(inputs.sigma2()) << ',' << format_g(inputs.s()) << ','
                << format_g(inputs.delta_prior()) << ',' << format_g(rec.prior_bound) << ','
                << format_g(rec.h_cond) << ',' << format_g(rec.gap) << '\n';
        }
    }
    return ExperimentRunResult{true, "bound comparison complete"};
}

ExperimentRunResult run_structural_entropy_check(const ExperimentSpec& spec, std::ostream& out) {
    const JointEdgeDistribution& dist = require_dist(spec);
    out << "n,k,h_struct,h_graph,approx,residual,hg_minus_hs,log2_factorial\n";
    bool all = true;
    for (int n : spec.n_list) {
        const double pairs = static_cast<double>(LabelledGraph::pair_count(n));
        const double h_struct = exact_structure_entropy(n, dist, MarginalSide::A);
        const double h_graph = pairs * dist.entropy_report().h_a;
        const double approx = h_graph - n * std::log2(static_cast<double>(n));
        const double log2_nfact = std::log2(static_cast<double>(factorial(n)));
        out << n << ',' << dist.ka() << ',' << format_g(h_struct) << ',' << format_g(h_graph)
            << ',' << format_g(approx) << ',' << format_g(h_struct - approx) << ','
            << format_g(h_graph - h_struct) << ',' << format_g(log2_nfact) << '\n';
        all = all && h_struct <= h_graph + kExactTol;
        all = all && h_graph - h_struct <= log2_nfact + kExactTol;
    }
    return ExperimentRunResult{all, all ? "structural entropy bounds hold"
                                        : "structural entropy bound violated"};
}

ExperimentRunResult run_alignment_concentration(const ExperimentSpec& spec, std::ostream& out) {
    const JointEdgeDistribution& dist = require_dist(spec);
    const std::vector<std::string> shapes =
        spec.shapes.empty() ? std::vector<std::string>{"identity", "transposition", "cycle"}
                            : spec.shapes;
    const std::vector<double> deltas =
        spec.deltas.empty() ? std::vector<double>{0.5, 1.0} : spec.deltas;

    out << "n,shape,trials,mean_stat,expected_stat,stderr,delta,tail_freq,tail_bound\n";
    for (int n : spec.n_list) {
        const double pairs = static_cast<double>(LabelledGraph::pair_count(n));
        for (std::size_t shape_idx = 0; shape_idx < shapes.size(); ++shape_idx) {
            const auto& shape_name = shapes[shape_idx];
            const Permutation perm = shape_permutation(shape_name, n);
            const double expected = expected_statistic(shape_of(perm), dist, n);
            std::vector<double> stats(spec.trials);
            const std::uint64_t stream =
                mix_seed(spec.seed, static_cast<std::uint64_t>(n) * 131 + shape_idx);
            parallel_trials(spec.trials, spec.workers, [&](std::uint64_t i) {
                Rng rng(mix_seed(stream, i));
                auto [ga, gb] = sample_pair(dist, n, rng);
                stats[i] = static_cast<double>(alignment_statistic(ga, gb, perm));
            });
            const double m = mean(stats);
            const double se = standard_error(stats);
            for (double d : deltas) {
                std::uint64_t exceed = 0;
                for (double s : stats)
                    if (s - expected > pairs * d) ++exceed;
                const double freq =
                    static_cast<double>(exceed) / static_cast<double>(spec.trials);
                const double bound = std::exp(-pairs * d * d / 2.0);
                out << n << ',' << shape_name << ',' << spec.trials << ',' << format_g(m) << ','
                    << format_g(expected) << ',' << format_g(se) << ',' << format_g(d) << ','
                    << format_g(freq) << ',' << format_g(std::min(1.0, bound)) << '\n';
            }
        }
    }
    return ExperimentRunResult{true, "alignment concentration complete"};
}

ExperimentRunResult run_experiment(const ExperimentSpec& spec, std::ostream& out) {
    switch (spec.kind) {
        case ExperimentKind::ConvergenceSweep: return run_convergence_sweep(spec, out);
        case ExperimentKind::SandwichCheck: return run_sandwich_check(spec, out);
        case ExperimentKind::RateSweep: return run_rate_sweep(spec, out);
        case ExperimentKind::BoundComparison: return run_bound_comparison_grid(spec, out);
        case ExperimentKind::StructuralEntropyCheck:
            return run_structural_entropy_check(spec, out);
        case ExperimentKind::AlignmentConcentration:
            return run_alignment_concentration(spec, out);
    }
    throw InvalidArgument("unknown experiment kind");
}

} // namespace cergraph
