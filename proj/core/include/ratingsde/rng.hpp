#pragma once

#include <array>
#include <cstdint>

namespace ratingsde {

/// Philox4x32-10 counter-based generator. Stateless: every draw is a pure
/// function of (key, counter), so trajectories and coordinates can be
/// simulated in any order, on any number of threads, with identical output.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Independent draw streams derived from one master seed. The stream id keeps
/// different consumers (simulation families, bootstrap, multi-start) from
/// ever sharing a counter.
enum class RngStream : std::uint32_t {
    cir = 0x11,
    gem_driver = 0x22,
    bootstrap = 0x33,
    multistart = 0x44,
    demo = 0x55,
    test = 0x66,
};

class CounterRng {
public:
    CounterRng(std::uint64_t seed, RngStream stream)
        : key_{static_cast<std::uint32_t>(seed),
               static_cast<std::uint32_t>(seed >> 32) ^ static_cast<std::uint32_t>(stream)}
    {
    }

    /// Two independent standard normals for counter (a, b, block).
    std::array<double, 2> normal_pair(std::uint32_t a, std::uint32_t b, std::uint32_t block) const;

    /// Uniform double in [0, 1).
    double uniform(std::uint32_t a, std::uint32_t b, std::uint32_t block) const;

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound, std::uint32_t a, std::uint32_t b,
                        std::uint32_t block) const;

private:
    std::array<std::uint32_t, 2> key_;
};

} // namespace ratingsde
