#include "cergraph/distribution.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cergraph/errors.hpp"

namespace cergraph {

namespace {

constexpr double kSumTolerance = 1e-12;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

} // namespace

ObjectKind compressed_kind(SourceVariant v) {
    switch (v) {
        case SourceVariant::GraphGivenGraph:
        case SourceVariant::GraphGivenStructure:
            return ObjectKind::Graph;
        default:
            return ObjectKind::Structure;
    }
}

ObjectKind side_kind(SourceVariant v) {
    switch (v) {
        case SourceVariant::GraphGivenGraph:
        case SourceVariant::StructureGivenGraph:
            return ObjectKind::Graph;
        default:
            return ObjectKind::Structure;
    }
}

std::string_view to_string(SourceVariant v) {
    switch (v) {
        case SourceVariant::GraphGivenGraph: return "graph-given-graph";
        case SourceVariant::GraphGivenStructure: return "graph-given-structure";
        case SourceVariant::StructureGivenGraph: return "structure-given-graph";
        case SourceVariant::StructureGivenStructure: return "structure-given-structure";
    }
    throw InvalidArgument("unknown source variant");
}

SourceVariant variant_from_string(std::string_view name) {
    if (name == "graph-given-graph") return SourceVariant::GraphGivenGraph;
    if (name == "graph-given-structure") return SourceVariant::GraphGivenStructure;
    if (name == "structure-given-graph") return SourceVariant::StructureGivenGraph;
    if (name == "structure-given-structure") return SourceVariant::StructureGivenStructure;
    throw InvalidArgument("unknown source variant: " + std::string(name));
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw InvalidArgument("binary_entropy argument outside [0,1]");
    return -xlog2x(x) - xlog2x(1.0 - x);
}

JointEdgeDistribution::JointEdgeDistribution(int ka, int kb, std::vector<double> probs)
    : ka_(ka), kb_(kb), probs_(std::move(probs)) {
    if (ka_ < 1 || kb_ < 1) throw InvalidArgument("alphabet bounds ka, kb must be >= 1");
    const std::size_t cells =
        static_cast<std::size_t>(ka_ + 1) * static_cast<std::size_t>(kb_ + 1);
    if (probs_.size() != cells)
        throw InvalidArgument("probability matrix must have (ka+1)*(kb+1) entries");

    double total = 0.0;
    min_support_prob_ = std::numeric_limits<double>::infinity();
    for (double p : probs_) {
        if (!(p >= 0.0)) throw InvalidArgument("probability entries must be >= 0");
        total += p;
        if (p > 0.0 && p < min_support_prob_) min_support_prob_ = p;
    }
    if (std::abs(total - 1.0) > kSumTolerance)
        throw InvalidArgument("probability entries must sum to 1 within 1e-12");

    log2_probs_.resize(cells);
    for (std::size_t i = 0; i < cells; ++i)
        log2_probs_[i] =
            probs_[i] > 0.0 ? std::log2(probs_[i]) : -std::numeric_limits<double>::infinity();

    marginal_a_.assign(static_cast<std::size_t>(ka_ + 1), 0.0);
    marginal_b_.assign(static_cast<std::size_t>(kb_ + 1), 0.0);
    for (int a = 0; a <= ka_; ++a)
        for (int b = 0; b <= kb_; ++b) {
            marginal_a_[static_cast<std::size_t>(a)] += prob(a, b);
            marginal_b_[static_cast<std::size_t>(b)] += prob(a, b);
        }
}

JointEdgeDistribution JointEdgeDistribution::subsampling(double p, double gamma) {
    if (p < 0.0 || p > 1.0 || gamma < 0.0 || gamma > 1.0)
        throw InvalidArgument("subsampling parameters must lie in [0,1]");
    const double p00 = (1.0 - p) + p * (1.0 - gamma) * (1.0 - gamma);
    const double p01 = p * gamma * (1.0 - gamma);
    const double p11 = p * gamma * gamma;
    return JointEdgeDistribution(1, 1, {p00, p01, p01, p11});
}

JointEdgeDistribution JointEdgeDistribution::from_json_text(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("distribution JSON: ") + e.what());
    }
    try {
        if (doc.contains("model")) {
            if (doc.at("model").get<std::string>() != "subsampling")
                throw InvalidArgument("distribution JSON: unknown model shorthand");
            return subsampling(doc.at("p").get<double>(), doc.at("gamma").get<double>());
        }
        const int ka = doc.at("ka").get<int>();
        const int kb = doc.at("kb").get<int>();
        const auto rows = doc.at("p").get<std::vector<std::vector<double>>>();
        if (static_cast<int>(rows.size()) != ka + 1)
            throw InvalidArgument("distribution JSON: p must have ka+1 rows");
        std::vector<double> probs;
        probs.reserve(static_cast<std::size_t>(ka + 1) * static_cast<std::size_t>(kb + 1));
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != kb + 1)
                throw InvalidArgument("distribution JSON: each row of p must have kb+1 entries");
            probs.insert(probs.end(), row.begin(), row.end());
        }
        return JointEdgeDistribution(ka, kb, std::move(probs));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("distribution JSON: ") + e.what());
    }
}

JointEdgeDistribution JointEdgeDistribution::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open distribution file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

std::size_t JointEdgeDistribution::cell(int a, int b) const {
    if (a < 0 || a > ka_ || b < 0 || b > kb_)
        throw InvalidArgument("symbol pair outside the distribution alphabet");
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(kb_ + 1) +
           static_cast<std::size_t>(b);
}

double JointEdgeDistribution::marginal_a(int a) const {
    if (a < 0 || a > ka_) throw InvalidArgument("symbol outside the A alphabet");
    return marginal_a_[static_cast<std::size_t>(a)];
}

double JointEdgeDistribution::marginal_b(int b) const {
    if (b < 0 || b > kb_) throw InvalidArgument("symbol outside the B alphabet");
    return marginal_b_[static_cast<std::size_t>(b)];
}

double JointEdgeDistribution::log2_marginal(MarginalSide side, int symbol) const {
    const double p = side == MarginalSide::A ? marginal_a(symbol) : marginal_b(symbol);
    return p > 0.0 ? std::log2(p) : -std::numeric_limits<double>::infinity();
}

double JointEdgeDistribution::p00() const {
    if (!unweighted()) throw InvalidArgument("p00 is defined only for unweighted distributions");
    return prob(0, 0);
}
double JointEdgeDistribution::p01() const {
    if (!unweighted()) throw InvalidArgument("p01 is defined only for unweighted distributions");
    return prob(0, 1);
}
double JointEdgeDistribution::p10() const {
    if (!unweighted()) throw InvalidArgument("p10 is defined only for unweighted distributions");
    return prob(1, 0);
}
double JointEdgeDistribution::p11() const {
    if (!unweighted()) throw InvalidArgument("p11 is defined only for unweighted distributions");
    return prob(1, 1);
}

EntropyReport JointEdgeDistribution::entropy_report() const {
    double h_ab = 0.0;
    for (double p : probs_) h_ab -= xlog2x(p);
    double h_a = 0.0;
    for (double p : marginal_a_) h_a -= xlog2x(p);
    double h_b = 0.0;
    for (double p : marginal_b_) h_b -= xlog2x(p);
    return EntropyReport{h_a, h_b, h_ab, h_ab - h_b, h_ab - h_a};
}

EntropyReport entropy_report(const JointEdgeDistribution& dist) {
    return dist.entropy_report();
}

double subsampling_conditional_entropy(double p, double gamma) {
    if (p < 0.0 || p > 1.0 || gamma < 0.0 || gamma > 1.0)
        throw InvalidArgument("subsampling parameters must lie in [0,1]");
    const double pg = p * gamma;
    const double first = pg > 0.0 ? pg * binary_entropy(gamma) : 0.0;
    if (pg >= 1.0) return first;
    return first + (1.0 - pg) * binary_entropy(pg * (1.0 - gamma) / (1.0 - pg));
}

} // namespace cergraph
