#include "cergraph/permutation.hpp"

#include <numeric>
#include <sstream>

#include "cergraph/errors.hpp"

namespace cergraph {

Permutation::Permutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    const int n = static_cast<int>(mapping_.size());
    if (n < 1) throw InvalidArgument("permutation must act on at least one label");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : mapping_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw InvalidArgument("permutation mapping is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

Permutation Permutation::transposition(int n, int i, int j) {
    auto p = identity(n);
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw InvalidArgument("transposition labels out of range");
    std::swap(p.mapping_[static_cast<std::size_t>(i)], p.mapping_[static_cast<std::size_t>(j)]);
    return p;
}

Permutation Permutation::full_cycle(int n) {
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = (i + 1) % n;
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(mapping_.size());
    for (int i = 0; i < size(); ++i)
        inv[static_cast<std::size_t>(mapping_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (mapping_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

std::string Permutation::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < mapping_.size(); ++i) {
        if (i) out << ' ';
        out << mapping_[i] + 1;
    }
    return out.str();
}

Permutation Permutation::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<int> m;
    int v = 0;
    while (in >> v) m.push_back(v - 1);
    return Permutation(std::move(m));
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.size() != g.size()) throw InvalidArgument("composing permutations of different sizes");
    std::vector<int> m(static_cast<std::size_t>(f.size()));
    for (int x = 0; x < f.size(); ++x) m[static_cast<std::size_t>(x)] = f(g(x));
    return Permutation(std::move(m));
}

} // namespace cergraph
