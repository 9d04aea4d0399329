#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

// Deterministic, platform-independent randomness. Everything random in the
// library (model sampling, true-model assignment, gaussian disturbances)
// derives from these primitives so that a seed pins byte-identical output on
// any machine. <random> engines would do, but its distributions are
// implementation-defined, which breaks that guarantee.

namespace dmac::rng {

/// splitmix64 finalizer round.
constexpr std::uint64_t scramble(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Independent child seed for a (seed, stream) pair.
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) noexcept {
    return scramble(scramble(seed) ^ scramble(stream ^ 0xA3C59AC2F0B2283Bull));
}

/// Map 64 random bits to [0, 1).
constexpr double to_unit(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Map 64 random bits to (0, 1); safe as a logarithm argument.
constexpr double to_open_unit(std::uint64_t bits) noexcept {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

/// Sequential splitmix64 stream.
class Stream {
public:
    explicit constexpr Stream(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next_u64() noexcept {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, 1).
    constexpr double next_unit() noexcept { return to_unit(next_u64()); }

    /// Uniform draw in [lo, hi).
    constexpr double next_in(double lo, double hi) noexcept {
        return lo + next_unit() * (hi - lo);
    }

    /// Uniform integer in [0, n).
    constexpr std::uint64_t next_below(std::uint64_t n) noexcept {
        return static_cast<std::uint64_t>(next_unit() * static_cast<double>(n)) % n;
    }

private:
    std::uint64_t state_;
};

/// Counter-based standard normal draw: a pure function of (seed, t, key),
/// so queries may happen in any order and still agree.
inline double counter_normal(std::uint64_t seed, std::uint64_t t, std::uint64_t key) noexcept {
    const std::uint64_t h = scramble(seed ^ scramble(t ^ scramble(key ^ 0x6C62272E07BB0142ull)));
    const double u1 = to_open_unit(scramble(h ^ 0x9E3779B97F4A7C15ull));
    const double u2 = to_unit(scramble(h ^ 0xC2B2AE3D27D4EB4Full));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace dmac::rng
