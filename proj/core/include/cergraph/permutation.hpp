#ifndef CERGRAPH_PERMUTATION_HPP
#define CERGRAPH_PERMUTATION_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cergraph {

// Bijection on vertex labels {0,...,n-1}. Text I/O is 1-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> mapping);

    static Permutation identity(int n);
    // A single swap i <-> j, all other labels fixed.
    static Permutation transposition(int n, int i, int j);
    // The full cycle 0 -> 1 -> ... -> n-1 -> 0.
    static Permutation full_cycle(int n);

    int size() const { return static_cast<int>(mapping_.size()); }
    int operator()(int i) const { return mapping_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& mapping() const { return mapping_; }

    Permutation inverse() const;

    bool is_identity() const;

    // 1-based images, space-separated.
    std::string to_text() const;
    static Permutation from_text(std::string_view text);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> mapping_;
};

// Function composition: compose(f, g) maps x to f(g(x)), so that
// apply_permutation(apply_permutation(graph, p), q)
//   == apply_permutation(graph, compose(q, p)).
Permutation compose(const Permutation& f, const Permutation& g);

} // namespace cergraph

#endif
