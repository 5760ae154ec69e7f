#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace swarmselect {

/// One step of splitmix64 (Steele, Lea, Flood 2014). Used to turn raw seeds
/// into well-mixed generator states and to derive child-stream seeds.
constexpr std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic, seedable source of all randomness in the artifact.
///
/// Generator: xorshift64* (Vigna, "An experimental exploration of
/// Marsaglia's xorshift generators, scrambled"), 64 bits of state. The state
/// is initialized with one splitmix64 step of the seed, so seed 0 and other
/// small seeds still start from a well-mixed nonzero state. Identical seeds
/// produce identical draw sequences on every platform.
///
/// Value semantics: copying a RandomSource snapshots its state, which is how
/// tests replay draw sequences.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed = 0) noexcept : seed_(seed) {
        std::uint64_t s = seed;
        state_ = splitmix64_next(s);
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;  // xorshift64* state must stay nonzero
    }

    std::uint64_t seed() const noexcept { return seed_; }

    /// Raw xorshift64* output; advances state by one draw.
    std::uint64_t next_u64() noexcept {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform double in [0, 1) from the top 53 bits of one draw.
    double next_unit() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi); consumes exactly one draw.
    double next_uniform(double lo, double hi) {
        if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("next_uniform: requires finite lo < hi");
        double v = lo + next_unit() * (hi - lo);
        if (v >= hi) v = std::nextafter(hi, lo);  // guard rounding at the open end
        return v;
    }

    /// Standard normal variate via Box-Muller; consumes exactly two uniform
    /// draws per call (the sine partner is discarded to keep the draw count
    /// fixed and documented).
    double next_normal() noexcept {
        double u1 = 1.0 - next_unit();  // (0, 1], keeps log finite
        double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Uniform index in [0, n); consumes one draw.
    std::size_t next_index(std::size_t n) {
        if (n == 0) throw std::invalid_argument("next_index: n must be positive");
        auto i = static_cast<std::size_t>(next_unit() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

    /// Independently seeded child stream: seed XOR stream-index, pushed
    /// through the same splitmix64 initialization.
    RandomSource split(std::uint64_t stream_index) const noexcept {
        return RandomSource(seed_ ^ stream_index);
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

}  // namespace swarmselect
