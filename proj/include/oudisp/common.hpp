#pragma once

#include <complex>
#include <numbers>

namespace oudisp {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr cplx kImag{0.0, 1.0};

}  // namespace oudisp
