#ifndef CERGRAPH_GRAPH_HPP
#define CERGRAPH_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cergraph {

using EdgeSymbol = std::uint8_t;

// Simple undirected weighted graph on n vertices, stored as the C(n,2)
// upper-triangle symbols over {0,...,k} in the fixed pair order
// (0,1),(0,2),...,(0,n-1),(1,2),... (0-based). Symbol 0 means "no edge";
// k = 1 is the unweighted case. Every serialization and hash uses this
// order bit-exactly.
class LabelledGraph {
public:
    // Empty graph (all symbols 0).
    LabelledGraph(int n, int k);
    LabelledGraph(int n, int k, std::vector<EdgeSymbol> edges);

    static std::size_t pair_count(int n) {
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    }

    int vertex_count() const { return n_; }
    int max_weight() const { return k_; }
    bool unweighted() const { return k_ == 1; }
    std::size_t pair_count() const { return edges_.size(); }

    // Index of the unordered pair {i, j}, 0-based vertices.
    std::size_t pair_index(int i, int j) const;

    EdgeSymbol edge(int i, int j) const { return edges_[pair_index(i, j)]; }
    void set_edge(int i, int j, EdgeSymbol s);

    const std::vector<EdgeSymbol>& edges() const { return edges_; }

    // |E(g)|: number of vertex pairs carrying a nonzero symbol.
    int edge_cardinality() const;

    // Text form: header "n k", then the C(n,2) symbols space-separated in
    // the fixed pair order.
    std::string to_text() const;
    static LabelledGraph from_text(std::string_view text);
    static LabelledGraph from_stream(std::istream& in);

    friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;
    friend std::strong_ordering operator<=>(const LabelledGraph&, const LabelledGraph&) = default;

private:
    int n_;
    int k_;
    std::vector<EdgeSymbol> edges_;
};

// All unordered pairs (i, j), i < j, in the fixed order.
std::vector<std::pair<int, int>> vertex_pairs(int n);

} // namespace cergraph

#endif
