#ifndef CERGRAPH_RNG_HPP
#define CERGRAPH_RNG_HPP

#include <cstdint>
#include <random>

namespace cergraph {

// splitmix64 step; also used to derive independent per-trial seeds from a
// master seed so results do not depend on worker partitioning.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(splitmix64(master) ^ stream);
}

// Deterministic RNG. Uniform doubles are built from raw 64-bit output rather
// than std::uniform_real_distribution, whose mapping is implementation
// defined; identical seeds must replay identical runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

} // namespace cergraph

#endif
