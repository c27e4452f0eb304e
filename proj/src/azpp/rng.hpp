#pragma once

#include <cmath>
#include <cstdint>

namespace azpp {

// splitmix64, used for seeding and stream derivation.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ with hand-rolled distributions. The standard <random>
// distributions are implementation-defined, which would break the
// byte-identical reproducibility contract across toolchains.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform in [0,1) with 53-bit resolution
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // uniform index in {0,...,n-1}; consumes exactly one draw
    int index(int n) {
        int i = static_cast<int>(uniform() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

    // Box-Muller; consumes exactly two draws
    double gaussian(double mean, double sd) {
        const double u1 = 1.0 - uniform();  // (0,1], keeps log finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sd * r * std::cos(kTwoPi * u2);
    }

private:
    static constexpr double kTwoPi = 6.283185307179586476925286766559;
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t state_[4];
};

enum class StreamRole : uint64_t { Environment = 1, Agent = 2, Shock = 3 };

// Stream derivation is a pure function of (master seed, role, id), so
// toggling one extension never perturbs another extension's draw sequence.
inline Rng make_stream(uint64_t master_seed, StreamRole role, uint64_t id = 0) {
    uint64_t s = master_seed;
    uint64_t h = splitmix64(s);
    s = h ^ (static_cast<uint64_t>(role) * 0x9e3779b97f4a7c15ULL);
    h = splitmix64(s);
    s = h ^ (id * 0xbf58476d1ce4e5b9ULL);
    return Rng(splitmix64(s));
}

}  // namespace azpp
