#ifndef CERGRAPH_CODEC_HPP
#define CERGRAPH_CODEC_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "cergraph/budget.hpp"
#include "cergraph/distribution.hpp"
#include "cergraph/model.hpp"

namespace cergraph {

// Fixed-rate random-binning codec configuration. The message alphabet holds
// 2^ceil(C(n,2)*R) bins; seed indexes one codebook out of the pseudorandom
// family, so codebook averaging is a seed sweep.
struct CodecConfig {
    int n;
    JointEdgeDistribution dist;
    SourceVariant variant;
    double rate_bits_per_pair; // R >= 0
    double delta;              // typicality slack > 0
    std::uint64_t seed;

    int bin_bits() const;
    std::uint64_t bin_count() const;
};

// Deterministic binning function Phi. Below the injectivity threshold it is
// a keyed 64-bit pseudorandom function of the object's canonical
// serialization reduced modulo bin_count; once bin_count covers every
// candidate object of the compressed kind, it is the object's enumeration
// rank, which makes the binning injective.
class BinAssignment {
public:
    BinAssignment(std::uint64_t seed, std::uint64_t bin_count, std::uint64_t candidate_count);

    std::uint64_t bin_count() const { return bin_count_; }
    bool injective() const { return bin_count_ >= candidate_count_; }

    std::uint64_t bin_of(const SourceObject& u) const;

    static std::uint64_t keyed_hash(std::uint64_t seed, const std::string& bytes);

private:
    std::uint64_t seed_;
    std::uint64_t bin_count_;
    std::uint64_t candidate_count_;
};

// Number of distinct objects of the compressed kind for this config.
std::uint64_t candidate_count(const CodecConfig& config, const Budget& budget = default_budget());

// Bin index of ua; structures are canonicalized before hashing, so
// isomorphic inputs collide by construction.
std::uint64_t encode(const SourceObject& ua, const CodecConfig& config,
                     const Budget& budget = default_budget());

// |(1/C(n,2)) * (-log2 P(ua|ub)) - H(A|B)| <= delta. Zero conditional
// probability is simply atypical, never an error.
bool typicality_test(const SourceObject& ua, const SourceObject& ub, const CodecConfig& config,
                     const Budget& budget = default_budget());

struct DecodeResult {
    enum class Status { Decoded, NoneTypical, Ambiguous };
    Status status;
    std::optional<SourceObject> value; // set iff status == Decoded
    std::uint64_t typical_in_bin;      // candidates passing both tests
};

// Scans every candidate object of the compressed kind; succeeds iff exactly
// one lands in the bin and is typical with ub.
DecodeResult decode(std::uint64_t bin_index, const SourceObject& ub, const CodecConfig& config,
                    const Budget& budget = default_budget());

// Thresholds for the unweighted three-clause typicality decomposition.
struct TypicalSetParams {
    double delta;
    double delta1; // delta / |log2(p10/p00)|
    double delta2; // delta / |log2(p01/p00)|
    double delta3; // delta / |log2(p11*p00/(p10*p01))|

    static TypicalSetParams from(const JointEdgeDistribution& dist, double delta);
};

struct DecomposedDiagnostics {
    bool accepted;
    bool a_edges_ok;    // clause (i): |E(ga)|/C within delta1 of p10+p11
    bool b_edges_ok;    // clause (ii): |E(sb)|/C within delta2 of p01+p11
    bool alignment_ok;  // clause (iii): optimal statistic/C within delta3 of p11
    double a_density;
    double b_density;
    double opt_density;
    int opt_statistic;
};

// The graph-alignment typicality check of the unweighted decoder: edge
// counts on both sides plus the optimized alignment statistic, window
// direction chosen by the sign of log(p11*p00/(p10*p01)).
DecomposedDiagnostics unweighted_typicality_decomposed(const LabelledGraph& ga,
                                                       const StructureKey& sb,
                                                       const JointEdgeDistribution& dist,
                                                       const TypicalSetParams& params,
                                                       const Budget& budget = default_budget());

struct SimulationReport {
    std::uint64_t trials;
    std::uint64_t errors;
    std::uint64_t none_typical;  // decoder found no typical candidate in the bin
    std::uint64_t ambiguous;     // more than one typical candidate in the bin
    std::uint64_t wrong_value;   // decoded uniquely but not to ua
    std::uint64_t atypical_inputs; // (ua, ub) outside the typical set
    double error_rate;
    double p_atypical; // exact P(T^c) when enumerable, else the empirical rate
    bool p_atypical_exact;
    double bound; // p_atypical + 2^-(C(n,2)*delta)
};

// Monte Carlo end-to-end error rate: sample (Ga,Gb), derive (ua,ub) for the
// variant, run encode -> decode, compare. Per-trial seeds come from
// sample_seed by a counter scheme, so results are invariant to the worker
// count.
SimulationReport simulate_error_rate(const CodecConfig& config, std::uint64_t trials,
                                     std::uint64_t sample_seed, int workers = 0,
                                     const Budget& budget = default_budget());

struct ExactErrorReport {
    double error_prob;
    double none_typical_prob;
    double ambiguous_prob;
    double wrong_value_prob;
    double p_atypical; // exact P(T^c)
    double bound;      // p_atypical + 2^-(C(n,2)*delta)
};

// Exact per-codebook error probability: enumerates every (ua, ub) pair and
// weights decode outcomes by P(ua, ub).
ExactErrorReport exact_error_rate(const CodecConfig& config,
                                  const Budget& budget = default_budget());

// Exact P((Ua, Ub) outside T_n(delta)) by enumeration.
double exact_atypical_probability(const CodecConfig& config,
                                  const Budget& budget = default_budget());

// CSV row format: variant,n,R,delta,seed,trials,errors,none_typical,ambiguous,bound
void write_simulation_csv_header(std::ostream& out);
void write_simulation_csv_row(std::ostream& out, const CodecConfig& config,
                              const SimulationReport& report);

} // namespace cergraph

#endif
