#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kfib/enclosure.h"

namespace kfib {

/// Which univariate generating function an asymptotic estimate refers to.
enum class SeriesTarget { Popularity, TotalBits };

struct AsymptoticEstimate {
  int k = 2;
  SeriesTarget target = SeriesTarget::Popularity;
  long n = 1;
  RealEnclosure value;
};

/// Guard digits added to every requested precision.
inline constexpr int kGuardDigits = 10;
/// Maximum number of precision doublings before giving up.
inline constexpr int kMaxPrecisionDoublings = 10;

/// Enclosure of phi_k, the root in (1, 2) of x^k - x^{k-1} - ... - 1, with
/// dyadic endpoints and width at most 2^-bits. Pure bisection with exact
/// sign evaluation.
RealEnclosure phi_bits(AvoidanceParams params, unsigned long bits);

/// Enclosure of phi_k of width < 10^-precision_digits.
RealEnclosure phi(AvoidanceParams params, int precision_digits);

/// Enclosure of 1/phi_k, the smallest-modulus root of g_k, of width
/// < 10^-precision_digits.
RealEnclosure inverse_phi(AvoidanceParams params, int precision_digits);

/// Limit of the expected bit value as n grows:
///   (k x^k - k x^{k-1} - x^k + 1) / (k x^k - k x^{k-1} + x^{2k} - 3 x^k + 2)
/// at x = 1/phi_k, enclosed to width < 10^-precision_digits.
RealEnclosure limit_value(AvoidanceParams params, int precision_digits);

/// Same limit, as the ratio of the leading asymptotic terms of the
/// popularity and total-bits series: numer_P(x) / numer_T(x) at x = 1/phi_k.
RealEnclosure limit_value_from_numerators(AvoidanceParams params, int precision_digits);

/// Leading-order estimate of [x^n] of the popularity or total-bits series:
///   2 n phi^{n+2} numer(1/phi) / (g_k^2)''(1/phi),  with (g_k^2)'' = 2 g_k'^2 at the root.
/// Enclosure has relative width < 10^-precision_digits. Requires n >= 1.
AsymptoticEstimate asymptotic_coefficient(AvoidanceParams params, SeriesTarget target, long n,
                                          int precision_digits);

/// Limit values for k = 2 .. k_max at `precision_digits` (computed in parallel).
std::vector<std::pair<int, RealEnclosure>> corollary_check(int k_max, int precision_digits = 15);

/// Same table computed on one thread; kept as the reference for the parallel path.
std::vector<std::pair<int, RealEnclosure>> corollary_check_serial(int k_max, int precision_digits = 15);

/// Correctly rounded decimal string of the limit, escalating precision until
/// the enclosure no longer straddles a rounding boundary.
std::string limit_decimal(AvoidanceParams params, int digits);

/// Correctly rounded decimal strings of phi_k and 1/phi_k.
std::string phi_decimal(AvoidanceParams params, int digits);
std::string inverse_phi_decimal(AvoidanceParams params, int digits);

}  // namespace kfib
