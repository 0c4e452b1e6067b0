#include "cergraph/graph.hpp"

#include <sstream>

#include "cergraph/errors.hpp"

namespace cergraph {

namespace {

void check_shape(int n, int k) {
    if (n < 1) throw InvalidArgument("vertex count must be >= 1");
    if (k < 1 || k > 255) throw InvalidArgument("max edge weight must be in [1, 255]");
}

} // namespace

LabelledGraph::LabelledGraph(int n, int k) : n_(n), k_(k) {
    check_shape(n, k);
    edges_.assign(pair_count(n), 0);
}

LabelledGraph::LabelledGraph(int n, int k, std::vector<EdgeSymbol> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
    check_shape(n, k);
    if (edges_.size() != pair_count(n))
        throw InvalidArgument("edge vector length must be n(n-1)/2");
    for (EdgeSymbol s : edges_)
        if (s > k_) throw InvalidArgument("edge symbol exceeds max weight k");
}

std::size_t LabelledGraph::pair_index(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
        throw InvalidArgument("vertex pair out of range");
    if (i > j) std::swap(i, j);
    const std::size_t row = static_cast<std::size_t>(i);
    return row * (2 * static_cast<std::size_t>(n_) - row - 1) / 2 +
           static_cast<std::size_t>(j - i - 1);
}

void LabelledGraph::set_edge(int i, int j, EdgeSymbol s) {
    if (s > k_) throw InvalidArgument("edge symbol exceeds max weight k");
    edges_[pair_index(i, j)] = s;
}

int LabelledGraph::edge_cardinality() const {
    int c = 0;
    for (EdgeSymbol s : edges_)
        if (s != 0) ++c;
    return c;
}

std::string LabelledGraph::to_text() const {
    std::ostringstream out;
    out << n_ << ' ' << k_ << '\n';
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (e) out << ' ';
        out << static_cast<int>(edges_[e]);
    }
    out << '\n';
    return out.str();
}

LabelledGraph LabelledGraph::from_stream(std::istream& in) {
    // Skip comment lines so files written with '#' markers parse too.
    while (in.peek() == '#') {
        std::string line;
        std::getline(in, line);
    }
    int n = 0, k = 0;
    if (!(in >> n >> k)) throw InvalidArgument("graph text: missing 'n k' header");
    check_shape(n, k);
    std::vector<EdgeSymbol> edges;
    edges.reserve(pair_count(n));
    for (std::size_t e = 0; e < pair_count(n); ++e) {
        int s = 0;
        if (!(in >> s)) throw InvalidArgument("graph text: not enough edge symbols");
        if (s < 0 || s > k) throw InvalidArgument("graph text: edge symbol out of range");
        edges.push_back(static_cast<EdgeSymbol>(s));
    }
    return LabelledGraph(n, k, std::move(edges));
}

LabelledGraph LabelledGraph::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return from_stream(in);
}

std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(LabelledGraph::pair_count(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

} // namespace cergraph
