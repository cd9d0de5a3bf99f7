#pragma once
// Seeded randomness. Distributions are hand-rolled on top of std::mt19937_64
// (whose output sequence the standard pins down) so that identical seeds give
// identical draws on every platform and standard library.

#include <cassert>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace zrpsim {

// One splitmix64 step; good avalanche, used for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Collision-resistant seed for a (stream, index) pair under a base seed.
// A plain xor would collide for nearby values; the mixing steps avoid that.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                                 std::uint64_t index) {
    return splitmix64(splitmix64(splitmix64(base) ^ stream) ^ index);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [lo, hi], inclusive. Rejection sampling, unbiased.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        assert(lo <= hi);
        const std::uint64_t range = static_cast<std::uint64_t>(hi) -
                                    static_cast<std::uint64_t>(lo) + 1;
        if (range == 0) return static_cast<std::int64_t>(next_u64());
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % range;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % range);
    }

    // Uniform index in [0, count); count must be positive.
    std::size_t uniform_index(std::size_t count) {
        assert(count > 0);
        return static_cast<std::size_t>(
            uniform_int(0, static_cast<std::int64_t>(count) - 1));
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Box-Muller. The (0, 1] shift keeps the log argument positive, so the
    // variate is always finite and a zero stddev returns the mean exactly.
    double normal(double mean, double stddev) {
        const double u = 1.0 - uniform01();
        const double v = uniform01();
        const double z =
            std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
        return mean + stddev * z;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace zrpsim
