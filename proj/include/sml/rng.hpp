#pragma once

#include <cstdint>

#include "sml/rational.hpp"

namespace sml {

/// SplitMix64: the counter-based generator used by every seeded suite.
/// A seed fully determines the stream; sub-streams are derived by mixing a
/// stream index into the seed, so suites can fan out reproducibly.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n); n > 0. Rejection-free modulo is fine here: streams
    /// only drive test-case shapes, not statistics.
    uint64_t below(uint64_t n) { return next() % n; }

    bool coin() { return next() & 1; }

    SplitMix64 split(uint64_t stream) const {
        SplitMix64 child(state ^ (0x9e3779b97f4a7c15ULL * (stream + 0x632be59bd9b4e019ULL)));
        child.next();
        return child;
    }
};

/// Uniform p/q with q in [1, max_den] and p in [0, q] (so values lie in [0,1]).
inline Rat random_rat01(SplitMix64& rng, uint64_t max_den) {
    long q = static_cast<long>(rng.below(max_den) + 1);
    long p = static_cast<long>(rng.below(static_cast<uint64_t>(q) + 1));
    return Rat(p, q);
}

} // namespace sml
