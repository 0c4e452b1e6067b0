#ifndef CERGRAPH_MODEL_HPP
#define CERGRAPH_MODEL_HPP

#include <string>
#include <utility>
#include <variant>

#include "cergraph/budget.hpp"
#include "cergraph/distribution.hpp"
#include "cergraph/graph.hpp"
#include "cergraph/logprob.hpp"
#include "cergraph/permutation.hpp"
#include "cergraph/rng.hpp"
#include "cergraph/structure.hpp"

namespace cergraph {

// A compressible object: a labelled graph or its structure.
using SourceObject = std::variant<LabelledGraph, StructureKey>;

ObjectKind kind_of(const SourceObject& u);
// The graph itself, or the canonical representative of a structure.
const LabelledGraph& underlying_graph(const SourceObject& u);
int object_vertex_count(const SourceObject& u);
SourceObject make_source_object(const LabelledGraph& g, ObjectKind kind,
                                const Budget& budget = default_budget());
// Kind-tagged text form; isomorphic graphs presented as structures collide
// by construction.
std::string serialize_canonical(const SourceObject& u);

// Draw (Ga, Gb): the C(n,2) symbol pairs are i.i.d. from dist.
std::pair<LabelledGraph, LabelledGraph> sample_pair(const JointEdgeDistribution& dist, int n,
                                                    Rng& rng);

// log2 P(ga, gb) = sum over pairs of log2 p[a_ij][b_ij].
LogProb log_joint_graph_prob(const LabelledGraph& ga, const LabelledGraph& gb,
                             const JointEdgeDistribution& dist);

struct MaxPermResult {
    LogProb value;
    Permutation witness; // apply_permutation(gb, witness) attains the value
};

// max over all permutations pi of log2 P(ga, pi(gb)). Exact brute force.
MaxPermResult max_perm_log_joint(const LabelledGraph& ga, const LabelledGraph& gb,
                                 const JointEdgeDistribution& dist,
                                 const Budget& budget = default_budget());

struct MaxPermPairResult {
    LogProb value;
    Permutation witness_a;
    Permutation witness_b;
};

// max over pairs (pi_a, pi_b) of log2 P(pi_a(ga), pi_b(gb)); by the symmetry
// of adjacency matrices this equals the single-permutation maximum.
MaxPermPairResult max_perm_log_joint_two_sided(const LabelledGraph& ga, const LabelledGraph& gb,
                                               const JointEdgeDistribution& dist,
                                               const Budget& budget = default_budget());

// log2 of sum over all permutations pi of P(ga, pi(gb)), via streaming
// log-sum-exp with a running maximum.
LogProb permutation_sum_log_joint(const LabelledGraph& ga, const LabelledGraph& gb,
                                  const JointEdgeDistribution& dist,
                                  const Budget& budget = default_budget());

// log2 P_S(s) = log2[(n!/|Aut(s)|) * P_marginal(g)] for any labeling g of s;
// the i.i.d. marginal is relabeling-invariant, so this equals the sum of
// P over all labelings.
LogProb log_structure_prob(const StructureKey& s, const JointEdgeDistribution& dist,
                           MarginalSide side, const Budget& budget = default_budget());

// log2 of the i.i.d. marginal probability of a labelled graph.
LogProb log_marginal_graph_prob(const LabelledGraph& g, const JointEdgeDistribution& dist,
                                MarginalSide side);

// log2 P(ua, ub) for the variant's object kinds. Structure probabilities are
// permutation sums with the automorphism overcount divided out; the double
// sum of the structure/structure case is n! times the single sum.
LogProb log_joint_prob(const SourceObject& ua, const SourceObject& ub, SourceVariant variant,
                       const JointEdgeDistribution& dist, const Budget& budget = default_budget());

// log2 of the marginal probability of the side-information object ub.
LogProb log_marginal_prob(const SourceObject& ub, const JointEdgeDistribution& dist,
                          const Budget& budget = default_budget());

// log2 P(ua | ub). Returns the zero flag (never throws) when the
// conditioning event has probability zero.
LogProb log_conditional(const SourceObject& ua, const SourceObject& ub, SourceVariant variant,
                        const JointEdgeDistribution& dist, const Budget& budget = default_budget());

// Unweighted P(Ga|Sb) through the closed factorization in edge counts and
// the alignment statistic:
//   (1/n!) * (p00/(p10+p00))^C(n,2) * (p10/p00)^|E(ga)|
//          * (p01(p10+p00)/(p00(p01+p11)))^|E(sb)|
//          * sum over pi of (p11 p00/(p10 p01))^{sum a_ij b_{pi(i)pi(j)}}.
// Requires all four cells positive; agrees with log_conditional.
LogProb log_conditional_alignment_form(const LabelledGraph& ga, const StructureKey& sb,
                                       const JointEdgeDistribution& dist,
                                       const Budget& budget = default_budget());

// Exact H(Ua | Ub) in bits (total, not per pair) by exhaustive enumeration.
double exact_conditional_entropy(int n, const JointEdgeDistribution& dist, SourceVariant variant,
                                 const Budget& budget = default_budget());

// Exact H(S) in bits for the structure of the chosen marginal.
double exact_structure_entropy(int n, const JointEdgeDistribution& dist, MarginalSide side,
                               const Budget& budget = default_budget());

} // namespace cergraph

#endif
