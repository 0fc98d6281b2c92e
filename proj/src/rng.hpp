#pragma once

#include <cmath>
#include <cstdint>

namespace weyl {

// Deterministic splittable generator: xoshiro256++ whose state is derived
// from (seed, stream) through SplitMix64. Each top-level Monte Carlo sample
// owns its stream, so results are reproducible bit-exactly for any thread
// count. Integer path is platform-independent; gaussians use libm sqrt/log.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0) {
        uint64_t x = seed ^ (stream * 0x9E3779B97F4A7C15ull + 0x6A09E667F3BCC909ull);
        for (auto& s : state_) {
            x += 0x9E3779B97F4A7C15ull;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
            s = z ^ (z >> 31);
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    uint64_t next_u64() {
        uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via the Marsaglia polar method (spare value cached).
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_double() - 1.0;
            v = 2.0 * next_double() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    // Uniform index in {0, ..., bound-1}.
    uint64_t next_index(uint64_t bound) { return next_u64() % bound; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Mixes sub-stream coordinates into a single stream id.
inline uint64_t stream_id(uint64_t purpose, uint64_t index, uint64_t attempt = 0) {
    uint64_t z = purpose * 0xD1342543DE82EF95ull + index * 0xAF251AF3B0F025B5ull +
                 attempt * 0x9E3779B97F4A7C15ull + 0x2545F4914F6CDD1Dull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace weyl
