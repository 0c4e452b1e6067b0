#include "cergraph/codec.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "cergraph/alignment.hpp"
#include "cergraph/enumerate.hpp"
#include "cergraph/errors.hpp"
#include "cergraph/format.hpp"
#include "cergraph/parallel.hpp"

namespace cergraph {

namespace {

void validate_config(const CodecConfig& config) {
    if (config.n < 1) throw InvalidArgument("codec config: n must be >= 1");
    if (config.rate_bits_per_pair < 0.0) throw InvalidArgument("codec config: rate must be >= 0");
    if (!(config.delta > 0.0)) throw InvalidArgument("codec config: delta must be > 0");
}

bool object_less(const SourceObject& x, const SourceObject& y) {
    return underlying_graph(x) < underlying_graph(y);
}

// Everything decode needs, built once: the full candidate list of the
// compressed kind in enumeration (= rank) order with their bins.
struct CodecContext {
    std::uint64_t bins = 0;
    bool injective = false;
    double h_cond = 0.0;
    double pairs = 0.0;
    std::vector<SourceObject> candidates;
    std::vector<std::uint64_t> candidate_bins;

    std::uint64_t bin_of_index(std::size_t i) const { return candidate_bins[i]; }

    std::size_t index_of(const SourceObject& u) const {
        const auto it =
            std::lower_bound(candidates.begin(), candidates.end(), u, object_less);
        if (it == candidates.end() || !(*it == u))
            throw InvalidArgument("object is not a candidate of the compressed kind");
        return static_cast<std::size_t>(it - candidates.begin());
    }
};

std::vector<SourceObject> enumerate_kind(int n, int k, ObjectKind kind, const Budget& budget) {
    std::vector<SourceObject> out;
    if (kind == ObjectKind::Graph) {
        GraphEnumeration graphs(n, k, budget);
        while (auto g = graphs.next()) out.emplace_back(std::move(*g));
    } else {
        for (auto& s : all_structures(n, k, budget)) out.emplace_back(std::move(s));
    }
    return out;
}

CodecContext make_context(const CodecConfig& config, const Budget& budget) {
    validate_config(config);
    CodecContext ctx;
    ctx.bins = config.bin_count();
    ctx.h_cond = config.dist.entropy_report().h_a_given_b;
    ctx.pairs = static_cast<double>(LabelledGraph::pair_count(config.n));
    ctx.candidates =
        enumerate_kind(config.n, config.dist.ka(), compressed_kind(config.variant), budget);
    ctx.injective = ctx.bins >= ctx.candidates.size();
    const BinAssignment binning(config.seed, ctx.bins, ctx.candidates.size());
    ctx.candidate_bins.reserve(ctx.candidates.size());
    for (std::size_t i = 0; i < ctx.candidates.size(); ++i) {
        ctx.candidate_bins.push_back(
            ctx.injective ? static_cast<std::uint64_t>(i)
                          : BinAssignment::keyed_hash(config.seed,
                                                      serialize_canonical(ctx.candidates[i])) %
                                ctx.bins);
    }
    return ctx;
}

bool typical_log(const LogProb& cond, double pairs, double h_cond, double delta) {
    if (cond.is_zero()) return false;
    if (pairs == 0.0) return true; // n = 1: the spectrum is empty
    const double spectrum = -cond.log2_value() / pairs;
    return std::abs(spectrum - h_cond) <= delta;
}

DecodeResult decode_with_context(const CodecContext& ctx, std::uint64_t bin_index,
                                 const SourceObject& ub, const CodecConfig& config,
                                 const Budget& budget) {
    std::uint64_t hits = 0;
    std::optional<SourceObject> found;
    for (std::size_t i = 0; i < ctx.candidates.size(); ++i) {
        if (ctx.candidate_bins[i] != bin_index) continue;
        const LogProb cond =
            log_conditional(ctx.candidates[i], ub, config.variant, config.dist, budget);
        if (!typical_log(cond, ctx.pairs, ctx.h_cond, config.delta)) continue;
        ++hits;
        if (hits == 1) found = ctx.candidates[i];
    }
    if (hits == 0) return DecodeResult{DecodeResult::Status::NoneTypical, std::nullopt, 0};
    if (hits > 1) return DecodeResult{DecodeResult::Status::Ambiguous, std::nullopt, hits};
    return DecodeResult{DecodeResult::Status::Decoded, std::move(found), 1};
}

// Joint/typicality tables over the full (ua, ub) product, for exact error
// and exact P(T^c).
struct ExactTables {
    std::vector<SourceObject> ubs;
    // Row-major [ub][ua]:
    std::vector<double> joint_prob;
    std::vector<char> typical;
    std::size_t ua_count = 0;
};

ExactTables build_exact_tables(const CodecContext& ctx, const CodecConfig& config,
                               const Budget& budget) {
    ExactTables t;
    t.ubs = enumerate_kind(config.n, config.dist.kb(), side_kind(config.variant), budget);
    t.ua_count = ctx.candidates.size();
    t.joint_prob.assign(t.ubs.size() * t.ua_count, 0.0);
    t.typical.assign(t.ubs.size() * t.ua_count, 0);
    for (std::size_t vb = 0; vb < t.ubs.size(); ++vb) {
        const LogProb marginal = log_marginal_prob(t.ubs[vb], config.dist, budget);
        for (std::size_t va = 0; va < t.ua_count; ++va) {
            const LogProb joint =
                log_joint_prob(ctx.candidates[va], t.ubs[vb], config.variant, config.dist, budget);
            if (joint.is_zero()) continue;
            const std::size_t cell = vb * t.ua_count + va;
            t.joint_prob[cell] = joint.to_prob();
            const LogProb cond = joint / marginal; // marginal > 0 since joint > 0
            t.typical[cell] = typical_log(cond, ctx.pairs, ctx.h_cond, config.delta) ? 1 : 0;
        }
    }
    return t;
}

} // namespace

int CodecConfig::bin_bits() const {
    const double pairs = static_cast<double>(LabelledGraph::pair_count(n));
    const int bits = static_cast<int>(std::ceil(pairs * rate_bits_per_pair - 1e-9));
    if (bits < 0) return 0;
    if (bits > 62) throw BudgetError("codec config: bin alphabet exceeds 2^62");
    return bits;
}

std::uint64_t CodecConfig::bin_count() const { return std::uint64_t{1} << bin_bits(); }

BinAssignment::BinAssignment(std::uint64_t seed, std::uint64_t bin_count,
                             std::uint64_t candidate_count)
    : seed_(seed), bin_count_(bin_count), candidate_count_(candidate_count) {
    if (bin_count_ == 0) throw InvalidArgument("bin count must be >= 1");
}

std::uint64_t BinAssignment::keyed_hash(std::uint64_t seed, const std::string& bytes) {
    std::uint64_t h = splitmix64(seed ^ 0x6a09e667f3bcc909ull);
    for (unsigned char c : bytes) h = splitmix64(h ^ c);
    return h;
}

std::uint64_t BinAssignment::bin_of(const SourceObject& u) const {
    if (injective()) {
        if (kind_of(u) == ObjectKind::Graph)
            return GraphEnumeration::rank(std::get<LabelledGraph>(u));
        // Structure rank: position in the canonical enumeration order.
        const auto& key = std::get<StructureKey>(u);
        StructureEnumeration structures(key.vertex_count(), key.max_weight());
        std::uint64_t rank = 0;
        while (auto s = structures.next()) {
            if (*s == key) return rank;
            ++rank;
        }
        throw InvalidArgument("structure not found in its enumeration");
    }
    return keyed_hash(seed_, serialize_canonical(u)) % bin_count_;
}

std::uint64_t candidate_count(const CodecConfig& config, const Budget& budget) {
    validate_config(config);
    if (compressed_kind(config.variant) == ObjectKind::Graph)
        return graph_count(config.n, config.dist.ka(), budget);
    return structure_count(config.n, config.dist.ka(), budget);
}

std::uint64_t encode(const SourceObject& ua, const CodecConfig& config, const Budget& budget) {
    validate_config(config);
    if (kind_of(ua) != compressed_kind(config.variant))
        throw InvalidArgument("encode: object kind does not match the configured variant");
    if (object_vertex_count(ua) != config.n)
        throw InvalidArgument("encode: object vertex count differs from the config");
    const BinAssignment binning(config.seed, config.bin_count(), candidate_count(config, budget));
    return binning.bin_of(ua);
}

bool typicality_test(const SourceObject& ua, const SourceObject& ub, const CodecConfig& config,
                     const Budget& budget) {
    validate_config(config);
    const LogProb cond = log_conditional(ua, ub, config.variant, config.dist, budget);
    const double pairs = static_cast<double>(LabelledGraph::pair_count(config.n));
    return typical_log(cond, pairs, config.dist.entropy_report().h_a_given_b, config.delta);
}

DecodeResult decode(std::uint64_t bin_index, const SourceObject& ub, const CodecConfig& config,
                    const Budget& budget) {
    const CodecContext ctx = make_context(config, budget);
    if (bin_index >= ctx.bins) throw InvalidArgument("decode: bin index out of range");
    return decode_with_context(ctx, bin_index, ub, config, budget);
}

TypicalSetParams TypicalSetParams::from(const JointEdgeDistribution& dist, double delta) {
    if (!dist.unweighted())
        throw InvalidArgument("decomposed typicality is defined for unweighted distributions");
    if (!(delta > 0.0)) throw InvalidArgument("delta must be > 0");
    if (!(dist.p00() > 0.0 && dist.p01() > 0.0 && dist.p10() > 0.0 && dist.p11() > 0.0))
        throw InvalidArgument("decomposed typicality needs all four cells of P_{A,B} positive");
    const double l1 = std::abs(std::log2(dist.p10() / dist.p00()));
    const double l2 = std::abs(std::log2(dist.p01() / dist.p00()));
    const double l3 = std::abs(std::log2(dist.p11() * dist.p00() / (dist.p10() * dist.p01())));
    if (l1 == 0.0 || l2 == 0.0 || l3 == 0.0)
        throw DegenerateModelError("decomposed typicality thresholds are undefined: "
                                   "a log-likelihood ratio vanishes");
    return TypicalSetParams{delta, delta / l1, delta / l2, delta / l3};
}

DecomposedDiagnostics unweighted_typicality_decomposed(const LabelledGraph& ga,
                                                       const StructureKey& sb,
                                                       const JointEdgeDistribution& dist,
                                                       const TypicalSetParams& params,
                                                       const Budget& budget) {
    if (!dist.unweighted() || !ga.unweighted() || sb.max_weight() != 1)
        throw InvalidArgument("decomposed typicality is defined for the unweighted case");
    if (!(dist.p00() > 0.0 && dist.p01() > 0.0 && dist.p10() > 0.0 && dist.p11() > 0.0))
        throw InvalidArgument("decomposed typicality needs all four cells of P_{A,B} positive");
    const double ratio = dist.p11() * dist.p00() / (dist.p10() * dist.p01());
    if (ratio == 1.0)
        throw DegenerateModelError("p11*p00 == p10*p01: the alignment window is undefined");
    if (ga.vertex_count() != sb.vertex_count())
        throw InvalidArgument("objects must share the same vertex count");

    const double pairs = static_cast<double>(ga.pair_count());
    DecomposedDiagnostics d{};
    d.a_density = static_cast<double>(ga.edge_cardinality()) / pairs;
    d.b_density = static_cast<double>(sb.edge_cardinality()) / pairs;
    d.a_edges_ok = std::abs(d.a_density - (dist.p10() + dist.p11())) <= params.delta1;
    d.b_edges_ok = std::abs(d.b_density - (dist.p01() + dist.p11())) <= params.delta2;

    const OptimizeSense sense = ratio > 1.0 ? OptimizeSense::Max : OptimizeSense::Min;
    const AlignmentResult opt =
        optimize_alignment(ga, sb.canonical_graph(), sense, budget);
    d.opt_statistic = opt.value;
    d.opt_density = static_cast<double>(opt.value) / pairs;
    d.alignment_ok = std::abs(d.opt_density - dist.p11()) <= params.delta3;

    d.accepted = d.a_edges_ok && d.b_edges_ok && d.alignment_ok;
    return d;
}

double exact_atypical_probability(const CodecConfig& config, const Budget& budget) {
    const CodecContext ctx = make_context(config, budget);
    const ExactTables t = build_exact_tables(ctx, config, budget);
    double mass = 0.0;
    for (std::size_t vb = 0; vb < t.ubs.size(); ++vb)
        for (std::size_t va = 0; va < t.ua_count; ++va) {
            const std::size_t cell = vb * t.ua_count + va;
            if (!t.typical[cell]) mass += t.joint_prob[cell];
        }
    return mass;
}

ExactErrorReport exact_error_rate(const CodecConfig& config, const Budget& budget) {
    const CodecContext ctx = make_context(config, budget);
    const ExactTables t = build_exact_tables(ctx, config, budget);

    ExactErrorReport report{};
    // Only bins that hold a candidate matter; remap them to compact slots so
    // the tally stays bounded by the candidate count even for huge bin
    // alphabets.
    std::vector<std::uint64_t> occupied = ctx.candidate_bins;
    std::sort(occupied.begin(), occupied.end());
    occupied.erase(std::unique(occupied.begin(), occupied.end()), occupied.end());
    std::vector<std::size_t> slot_of(t.ua_count);
    for (std::size_t va = 0; va < t.ua_count; ++va)
        slot_of[va] = static_cast<std::size_t>(
            std::lower_bound(occupied.begin(), occupied.end(), ctx.candidate_bins[va]) -
            occupied.begin());

    // Typical candidates per bin, recomputed per side-information value.
    std::vector<std::uint64_t> typical_in_bin(occupied.size(), 0);
    for (std::size_t vb = 0; vb < t.ubs.size(); ++vb) {
        std::fill(typical_in_bin.begin(), typical_in_bin.end(), 0);
        for (std::size_t va = 0; va < t.ua_count; ++va)
            if (t.typical[vb * t.ua_count + va]) ++typical_in_bin[slot_of[va]];
        for (std::size_t va = 0; va < t.ua_count; ++va) {
            const std::size_t cell = vb * t.ua_count + va;
            const double p = t.joint_prob[cell];
            if (p == 0.0) continue;
            if (!t.typical[cell]) report.p_atypical += p;
            const std::uint64_t hits = typical_in_bin[slot_of[va]];
            if (t.typical[cell]) {
                if (hits > 1) {
                    report.ambiguous_prob += p;
                    report.error_prob += p;
                }
                // hits == 1: decoded correctly
            } else {
                report.error_prob += p;
                if (hits == 0)
                    report.none_typical_prob += p;
                else if (hits == 1)
                    report.wrong_value_prob += p;
                else
                    report.ambiguous_prob += p;
            }
        }
    }
    const double pairs = static_cast<double>(LabelledGraph::pair_count(config.n));
    report.bound = report.p_atypical + std::exp2(-pairs * config.delta);
    return report;
}

SimulationReport simulate_error_rate(const CodecConfig& config, std::uint64_t trials,
                                     std::uint64_t sample_seed, int workers,
                                     const Budget& budget) {
    if (trials < 1) throw InvalidArgument("simulate_error_rate: trials must be >= 1");
    const CodecContext ctx = make_context(config, budget);

    enum : std::uint8_t { kCorrect, kNoneTypical, kAmbiguous, kWrongValue };
    std::vector<std::uint8_t> outcome(trials, kCorrect);
    std::vector<std::uint8_t> atypical(trials, 0);

    parallel_trials(trials, workers, [&](std::uint64_t i) {
        Rng rng(mix_seed(sample_seed, i));
        auto [ga, gb] = sample_pair(config.dist, config.n, rng);
        const SourceObject ua =
            make_source_object(ga, compressed_kind(config.variant), budget);
        const SourceObject ub = make_source_object(gb, side_kind(config.variant), budget);

        const std::uint64_t bin = ctx.bin_of_index(ctx.index_of(ua));
        const DecodeResult result = decode_with_context(ctx, bin, ub, config, budget);

        const LogProb cond = log_conditional(ua, ub, config.variant, config.dist, budget);
        atypical[i] = typical_log(cond, ctx.pairs, ctx.h_cond, config.delta) ? 0 : 1;

        switch (result.status) {
            case DecodeResult::Status::NoneTypical:
                outcome[i] = kNoneTypical;
                break;
            case DecodeResult::Status::Ambiguous:
                outcome[i] = kAmbiguous;
                break;
            case DecodeResult::Status::Decoded:
                outcome[i] = (*result.value == ua) ? kCorrect : kWrongValue;
                break;
        }
    });

    SimulationReport report{};
    report.trials = trials;
    for (std::uint64_t i = 0; i < trials; ++i) {
        report.none_typical += outcome[i] == kNoneTypical;
        report.ambiguous += outcome[i] == kAmbiguous;
        report.wrong_value += outcome[i] == kWrongValue;
        report.atypical_inputs += atypical[i];
    }
    report.errors = report.none_typical + report.ambiguous + report.wrong_value;
    report.error_rate = static_cast<double>(report.errors) / static_cast<double>(trials);

    try {
        report.p_atypical = exact_atypical_probability(config, budget);
        report.p_atypical_exact = true;
    } catch (const BudgetError&) {
        report.p_atypical =
            static_cast<double>(report.atypical_inputs) / static_cast<double>(trials);
        report.p_atypical_exact = false;
    }
    report.bound = report.p_atypical + std::exp2(-ctx.pairs * config.delta);
    return report;
}

void write_simulation_csv_header(std::ostream& out) {
    out << "variant,n,R,delta,seed,trials,errors,none_typical,ambiguous,bound\n";
}

void write_simulation_csv_row(std::ostream& out, const CodecConfig& config,
                              const SimulationReport& report) {
    out << to_string(config.variant) << ',' << config.n << ','
        << format_g(config.rate_bits_per_pair) << ',' << format_g(config.delta) << ','
        << config.seed << ',' << report.trials << ',' << report.errors << ','
        << report.none_typical << ',' << report.ambiguous << ',' << format_g(report.bound)
        << '\n';
}

} // namespace cergraph
