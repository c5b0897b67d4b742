#pragma once

// Complex log-Gamma by a Lanczos-type series, extended to the left
// half-plane with the reflection formula.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace planebranch {

using Complex = std::complex<double>;

namespace detail {

// Lanczos coefficients for g = 671/128 (14 terms); relative error below
// 1e-15 for Re z >= 1/2.
inline constexpr double kLanczosShift = 5.24218750000000000;
inline constexpr double kLanczosHead = 0.999999999999997092;
inline constexpr std::array<double, 14> kLanczosCoeffs = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,     -0.491913816097620199,
    .339946499848118887e-4,  .465236289270485756e-4,  -.983744753048795646e-4, .158088703224912494e-3,
    -.210264441724104883e-3, .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};
inline constexpr double kSqrtTwoPi = 2.5066282746310005;

inline Complex lanczos_log_gamma(Complex z) {
  Complex tmp = z + kLanczosShift;
  tmp = (z + 0.5) * std::log(tmp) - tmp;
  Complex ser = kLanczosHead;
  Complex y = z;
  for (double c : kLanczosCoeffs) {
    y += 1.0;
    ser += c / y;
  }
  return tmp + std::log(kSqrtTwoPi * ser / z);
}

}  // namespace detail

/// log Gamma(z) up to an additive multiple of 2 pi i; exp(log_gamma(z)) is
/// Gamma(z). Undefined at the non-positive integers.
inline Complex log_gamma(Complex z) {
  constexpr double pi = std::numbers::pi;
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return std::log(pi) - std::log(std::sin(pi * z)) - detail::lanczos_log_gamma(1.0 - z);
  }
  return detail::lanczos_log_gamma(z);
}

inline Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

}  // namespace planebranch
