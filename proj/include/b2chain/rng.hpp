#pragma once

#include "b2chain/cmatrix.hpp"

#include <cstdint>

namespace b2chain {

// Deterministic stream of doubles/complex points. Does not use the standard
// distributions (their output is implementation-defined); reports must be
// bit-identical for a given seed on any platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    uint64_t next_u64() {
        // splitmix64
        uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // complex point in the annulus r_lo <= |u| <= r_hi
    cx annulus(double r_lo = 0.3, double r_hi = 2.5) {
        const double r = uniform(r_lo, r_hi);
        const double phi = uniform(0.0, 6.283185307179586476925286766559);
        return cx(r * std::cos(phi), r * std::sin(phi));
    }

private:
    uint64_t s_;
};

}  // namespace b2chain
