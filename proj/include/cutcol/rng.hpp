#pragma once

#include <cstdint>

namespace cutcol {

// Seedable, splittable generator (splitmix64 core). Every randomized
// component takes an Rng or a seed, never a global; identical seeds give
// identical streams on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive. Rejection sampling, no modulo bias.
    int64_t uniform(int64_t lo, int64_t hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<int64_t>(next());  // full 64-bit range
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t r;
        do { r = next(); } while (r >= limit);
        return lo + static_cast<int64_t>(r % span);
    }

    // Independent child stream; parent state is not advanced.
    Rng split(uint64_t tag) const {
        Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 0x632be59bd9b4e019ULL)));
        child.next();
        return child;
    }

private:
    uint64_t state_;
};

}  // namespace cutcol
