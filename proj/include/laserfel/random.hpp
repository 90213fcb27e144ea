#pragma once

#include <cstdint>
#include <random>

namespace laserfel {

/// Uniform double in the open interval (0, 1) from the top 53 bits of a
/// 64-bit Mersenne twister draw. Unlike std::uniform_real_distribution the
/// mapping is fixed, so sequences are identical across standard libraries.
inline double uniform_open(std::mt19937_64& rng) {
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    return (static_cast<double>(rng() >> 11) + 0.5) * kScale;
}

/// Standard normal quantile.
double standard_normal_quantile(double p);

}  // namespace laserfel
