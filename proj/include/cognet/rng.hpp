#pragma once

#include <cmath>
#include <cstdint>

namespace cognet {

// Counter-based seed derivation + xoshiro256++ streams.
//
// Every trial/node gets its own stream derived from (master seed, ids...),
// so parallel generation is order-independent and a run is reproducible
// byte-for-byte regardless of worker count. No std::<distribution> is used
// anywhere: those are implementation-defined and would break cross-stdlib
// reproducibility of the CSV outputs.

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Mixes a list of stream identifiers into a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = master;
    s ^= splitmix64_next(s) + a;
    s ^= splitmix64_next(s) + b;
    s ^= splitmix64_next(s) + c;
    (void)splitmix64_next(s);
    return s;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64_next(sm);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    static Rng stream(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                      std::uint64_t c = 0) {
        return Rng(derive_seed(master, a, b, c));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Poisson draw by summing unit exponentials until the mean is exceeded.
    // O(mean) per draw and stable for large means (works in log space).
    long poisson(double mean) {
        if (mean <= 0.0) return 0;
        long k = 0;
        double acc = 0.0;
        for (;;) {
            const double u = uniform01();
            acc += -std::log1p(-u);
            if (acc >= mean) return k;
            ++k;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

} // namespace cognet
