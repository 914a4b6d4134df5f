// Physical constants, CODATA 2018 exact values. Single source of truth for
// every module; nothing else is allowed to restate these numbers.

#pragma once

#include <numbers>

namespace cpmech {

inline constexpr double kPlanck = 6.62607015e-34;      // J*s
inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHbar = kPlanck / (2.0 * kPi);  // J*s

}  // namespace cpmech
