// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>

namespace mma {

// xoshiro256** seeded via splitmix64. All derived values are computed with
// integer arithmetic plus IEEE add/mul/sqrt only, so sequences are identical
// across platforms for a given seed.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& si : s_) si = splitmix64(x);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform float in [lo, hi), 24 bits of randomness.
    float uniform(float lo = 0.0f, float hi = 1.0f) {
        float u = static_cast<float>(next_u64() >> 40) * (1.0f / 16777216.0f);
        return lo + (hi - lo) * u;
    }

    // Inclusive integer range [lo, hi].
    int64_t uniform_int(int64_t lo, int64_t hi) {
        if (hi <= lo) return lo;
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(next_u64() % span);
    }

    // Approximate standard normal: sum of 12 uniforms minus 6 (exact unit
    // variance, no libm transcendentals, so bit-stable everywhere).
    float normal() {
        float acc = 0.0f;
        for (int i = 0; i < 12; ++i) acc += uniform();
        return acc - 6.0f;
    }

    // Independent child stream; used to key per-item generation.
    Rng fork(uint64_t stream) const {
        uint64_t x = s_[0] ^ (stream * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
        return Rng(splitmix64(x));
    }

    template <class T>
    void shuffle(T* data, size_t n) {
        for (size_t i = n; i > 1; --i) {
            size_t j = static_cast<size_t>(uniform_int(0, static_cast<int64_t>(i) - 1));
            T tmp = data[i - 1];
            data[i - 1] = data[j];
            data[j] = tmp;
        }
    }

    static uint64_t splitmix64(uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    uint64_t s_[4];
};

} // namespace mma
