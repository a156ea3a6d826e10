#pragma once

#include <cstdint>

namespace pachgap {

// splitmix64: tiny, portable, byte-identical across platforms. All sampling in
// the workbench goes through this so reports are reproducible from one seed.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n) by rejection.
    uint64_t below(uint64_t n) {
        if (n == 0) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    uint32_t u16() { return static_cast<uint32_t>(next() & 0xffffULL); }
};

// Independent deterministic substream: mixes a purpose tag into the seed.
inline SplitMix64 substream(uint64_t seed, uint64_t tag) {
    SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
    mix.next();
    return mix;
}

} // namespace pachgap
