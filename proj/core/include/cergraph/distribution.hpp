#ifndef CERGRAPH_DISTRIBUTION_HPP
#define CERGRAPH_DISTRIBUTION_HPP

#include <string>
#include <string_view>
#include <vector>

namespace cergraph {

// Entropies of the per-pair joint distribution, in bits per vertex pair.
struct EntropyReport {
    double h_a;
    double h_b;
    double h_ab;
    double h_a_given_b;
    double h_b_given_a;
};

// Which object is compressed and which is the decoder side information.
enum class SourceVariant {
    GraphGivenGraph,
    GraphGivenStructure,
    StructureGivenGraph,
    StructureGivenStructure,
};

enum class ObjectKind { Graph, Structure };
enum class MarginalSide { A, B };

ObjectKind compressed_kind(SourceVariant v);
ObjectKind side_kind(SourceVariant v);
std::string_view to_string(SourceVariant v);
SourceVariant variant_from_string(std::string_view name);

// Binary entropy h2(x) in bits, with 0 log 0 := 0.
double binary_entropy(double x);

// Joint distribution P_{A,B} of a single vertex-pair symbol pair, the
// per-pair law driving the correlated Erdos-Renyi model. Symbols range over
// {0..ka} x {0..kb}. Entries are validated nonnegative with total 1 within
// 1e-12 absolute.
class JointEdgeDistribution {
public:
    // probs is row-major (ka+1) x (kb+1): probs[a * (kb+1) + b].
    JointEdgeDistribution(int ka, int kb, std::vector<double> probs);

    // The subsampling instance: an ER(p) parent with each edge kept
    // independently with probability gamma on each side, so
    //   p00 = (1-p) + p(1-gamma)^2, p01 = p10 = p*gamma*(1-gamma),
    //   p11 = p*gamma^2.
    static JointEdgeDistribution subsampling(double p, double gamma);

    // {"ka":..,"kb":..,"p":[[..]]} or {"model":"subsampling","p":..,"gamma":..}
    static JointEdgeDistribution from_json_text(std::string_view text);
    static JointEdgeDistribution from_json_file(const std::string& path);

    int ka() const { return ka_; }
    int kb() const { return kb_; }

    double prob(int a, int b) const { return probs_[cell(a, b)]; }
    bool in_support(int a, int b) const { return probs_[cell(a, b)] > 0.0; }
    // log2 P(a,b); -infinity on zero cells (callers check support first).
    double log2_prob(int a, int b) const { return log2_probs_[cell(a, b)]; }

    double marginal_a(int a) const;
    double marginal_b(int b) const;
    double log2_marginal(MarginalSide side, int symbol) const;
    int max_weight(MarginalSide side) const { return side == MarginalSide::A ? ka_ : kb_; }

    // Smallest nonzero entry of the joint matrix.
    double min_support_prob() const { return min_support_prob_; }

    bool unweighted() const { return ka_ == 1 && kb_ == 1; }
    // Unweighted shorthand accessors; require ka == kb == 1.
    double p00() const;
    double p01() const;
    double p10() const;
    double p11() const;

    EntropyReport entropy_report() const;

private:
    std::size_t cell(int a, int b) const;

    int ka_;
    int kb_;
    std::vector<double> probs_;
    std::vector<double> log2_probs_;
    std::vector<double> marginal_a_;
    std::vector<double> marginal_b_;
    double min_support_prob_;
};

EntropyReport entropy_report(const JointEdgeDistribution& dist);

// Closed form H(A|B) of the subsampling model:
//   p*gamma*h2(gamma) + (1 - p*gamma)*h2(p*gamma*(1-gamma)/(1-p*gamma)).
double subsampling_conditional_entropy(double p, double gamma);

} // namespace cergraph

#endif
