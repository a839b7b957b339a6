#pragma once

// SplitMix64: tiny counter-based generator.  Every consumer in this library
// derives an independent stream from (seed, index), so results are identical
// regardless of thread count or evaluation order.

#include <cstdint>

namespace tuttelab {

inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    // Independent substream for trial/work-item `index` of a run seeded with
    // `seed`.  Documented scheme: state = mix64(seed ^ (golden * (index+1))).
    static SplitMix64 substream(uint64_t seed, uint64_t index) {
        return SplitMix64(mix64(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
    }

    uint64_t next() { return mix64(state_++); }

    // Uniform in [0, n) by rejection; n >= 1.
    uint64_t next_below(uint64_t n) {
        const uint64_t limit = n * (~0ULL / n);  // multiple of n
        uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    // Uniform integer in [lo, hi], both ends included.
    int64_t next_in(int64_t lo, int64_t hi) {
        return lo +
               static_cast<int64_t>(next_below(static_cast<uint64_t>(hi - lo) + 1));
    }

private:
    uint64_t state_;
};

}  // namespace tuttelab
