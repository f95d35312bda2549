#include "ratingsde/rng.hpp"

#include <cmath>

namespace ratingsde {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo)
{
    std::uint64_t p = std::uint64_t(a) * b;
    hi = std::uint32_t(p >> 32);
    lo = std::uint32_t(p);
}

inline std::uint64_t join64(std::uint32_t hi, std::uint32_t lo)
{
    return (std::uint64_t(hi) << 32) | lo;
}

// 53-bit mantissa uniform in [0, 1).
inline double u64_to_unit(std::uint64_t x)
{
    return double(x >> 11) * 0x1.0p-53;
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key)
{
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
        mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

std::array<double, 2> CounterRng::normal_pair(std::uint32_t a, std::uint32_t b,
                                              std::uint32_t block) const
{
    auto words = philox4x32({a, b, block, 0}, key_);
    // Box-Muller; u1 shifted into (0, 1] so the log is finite.
    double u1 = 1.0 - u64_to_unit(join64(words[0], words[1]));
    double u2 = u64_to_unit(join64(words[2], words[3]));
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

double CounterRng::uniform(std::uint32_t a, std::uint32_t b, std::uint32_t block) const
{
    auto words = philox4x32({a, b, block, 1}, key_);
    return u64_to_unit(join64(words[0], words[1]));
}

std::uint64_t CounterRng::below(std::uint64_t bound, std::uint32_t a, std::uint32_t b,
                                std::uint32_t block) const
{
    auto words = philox4x32({a, b, block, 2}, key_);
    // Fixed-point multiply; bias is O(bound / 2^64), irrelevant at our pool sizes.
    unsigned __int128 wide = static_cast<unsigned __int128>(join64(words[0], words[1])) * bound;
    return static_cast<std::uint64_t>(wide >> 64);
}

} // namespace ratingsde
