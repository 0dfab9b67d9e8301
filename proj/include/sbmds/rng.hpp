#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace sbmds {

// splitmix64, used to expand a user seed into engine state and to derive
// independent child seeds for worker streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// xoshiro256++ with explicit 64-bit seeding. Draw order is fixed, so runs
// are bitwise reproducible for a given seed; split() derives a statistically
// independent stream for parallel work.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : seed_(seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    std::uint64_t operator()() {
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

    // Uniform on [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1); never returns 0 so log(u) is safe.
    double uniform_pos() {
        double u;
        do { u = uniform(); } while (u == 0.0);
        return u;
    }

    // Standard normal via the Marsaglia polar method (second draw cached).
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        cached_ = v * f;
        have_cached_ = true;
        return u * f;
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    // Child stream with a seed derived from this stream's seed and an index.
    Rng split(std::uint64_t stream_index) const {
        std::uint64_t sm = seed_ ^ (0x517cc1b727220a95ull * (stream_index + 1));
        return Rng(splitmix64(sm));
    }

    std::uint64_t seed() const { return seed_; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_ = 0;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace sbmds
