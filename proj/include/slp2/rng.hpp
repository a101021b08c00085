#pragma once

#include <cstdint>

namespace slp2 {

/// Splittable counter-based PRNG (splitmix64 core). Seeded explicitly;
/// output is identical across platforms, so generated corpora are
/// reproducible in CI. There is no global RNG anywhere in the library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), n > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (~n + 1) % n; // 2^64 mod n
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    bool coin() { return (next_u64() & 1) != 0; }

    /// Independent child stream.
    Rng split() { return Rng(next_u64() ^ 0x5851f42d4c957f2dull); }

private:
    std::uint64_t state_;
};

} // namespace slp2
