#pragma once

#include <cstdint>

#include "acyclo/graph.hpp"

namespace acyclo {

// SplitMix64. Small, portable, and good enough for coin flips; every
// randomized operation in the library derives its stream from this.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound); bound > 0. The modulo bias is
    // irrelevant at 64-bit word width and keeps the stream portable.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// One word per unordered pair in lexicographic pair order; low bit set
// orients i -> j. A pure function of (n, seed).
inline Tournament random_tournament(int n, std::uint64_t seed, int size_cap = kDefaultSizeCap) {
    if (n < 1) throw PreconditionViolated("random_tournament: n must be >= 1");
    if (n > size_cap) throw SizeLimitExceeded("random_tournament: n exceeds cap");
    SplitMix64 rng(seed);
    std::vector<Bits> rows(static_cast<size_t>(n), Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (rng.next() & 1)
                rows[static_cast<size_t>(i)].set(j);
            else
                rows[static_cast<size_t>(j)].set(i);
        }
    return Tournament(std::move(rows));
}

// Fisher-Yates on 0..n-1 driven by the given stream.
inline LinearOrder random_order(int n, SplitMix64& rng) {
    std::vector<int> o(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) o[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(o[static_cast<size_t>(i)], o[static_cast<size_t>(j)]);
    }
    return LinearOrder(std::move(o));
}

inline LinearOrder random_order(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return random_order(n, rng);
}

// One word per edge in ascending (u, v) order; low bit set orients u -> v.
inline OrientedGraph random_orientation(const UndirectedGraph& g, std::uint64_t seed) {
    SplitMix64 rng(seed);
    OrientedGraph d(g.size());
    for (auto [u, v] : g.edges()) {
        if (rng.next() & 1)
            d.add_edge(u, v);
        else
            d.add_edge(v, u);
    }
    return d;
}

// Deterministic per-task seed for (base, a, b) triples.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    SplitMix64 rng(base);
    std::uint64_t x = rng.next() ^ (a * 0x9E3779B97F4A7C15ull);
    SplitMix64 rng2(x);
    return rng2.next() ^ (b * 0xC2B2AE3D27D4EB4Full);
}

}  // namespace acyclo
