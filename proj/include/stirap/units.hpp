// Unit conventions: everything inside the library is SI (seconds, angular
// rad/s). Tool boundaries speak ns and cyclic MHz, matching lab usage.
#pragma once

#include <numbers>

namespace stirap::units {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double ns_to_s(double t_ns) { return t_ns * 1e-9; }
inline constexpr double s_to_ns(double t_s) { return t_s * 1e9; }

inline constexpr double mhz_to_hz(double f_mhz) { return f_mhz * 1e6; }
inline constexpr double hz_to_mhz(double f_hz) { return f_hz * 1e-6; }

// cyclic frequency [Hz] <-> angular frequency [rad/s]
inline constexpr double cyclic_to_angular(double f_hz) { return two_pi * f_hz; }
inline constexpr double angular_to_cyclic(double w) { return w / two_pi; }

}  // namespace stirap::units
