#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace sicq {

// splitmix64 step; expands seeds into xoshiro state and derives sub-streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Seed for sub-stream `index` of a run seeded with `seed`. Restarts and
// Monte-Carlo chunks each own one of these, so serial and parallel execution
// see identical streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
    return splitmix64(s);
}

// xoshiro256++ (Blackman & Vigna, public domain). Every stochastic operation
// in this library draws from an instance seeded explicitly with 64 bits, so
// results are bit-reproducible across platforms; nothing uses <random>
// distributions, whose outputs are implementation-defined.
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next() {
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

    // Uniform in (0, 1]; never returns zero, so log() below is safe.
    double uniform01() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    // Standard normal via Box-Muller.
    double normal() {
        const double r = std::sqrt(-2.0 * std::log(uniform01()));
        return r * std::cos(2.0 * std::numbers::pi * uniform01());
    }

    // Complex Gaussian with independent N(0,1) real and imaginary parts,
    // one Box-Muller pair per call.
    std::complex<double> complex_normal() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(angle), r * std::sin(angle)};
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

}  // namespace sicq
