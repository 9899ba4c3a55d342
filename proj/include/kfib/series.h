#pragma once

#include <vector>

#include "kfib/polynomial.h"

namespace kfib {

/// numerator / denominator as a formal power series in x.
struct RationalFunction {
  IntPolynomial numerator;
  IntPolynomial denominator;
};

/// First coefficients of a rational generating function.
struct SeriesExpansion {
  IntPolynomial numerator;
  IntPolynomial denominator;
  std::vector<BigInt> coeffs;  // coeffs[n] = [x^n] numerator/denominator
};

/// Truncated bivariate series: table[n][m] is the coefficient of x^n y^m,
/// for n = 0 .. max_n and m = 0 .. n.
struct BivariateTruncation {
  int max_n = 0;
  std::vector<std::vector<BigInt>> table;

  friend bool operator==(const BivariateTruncation&, const BivariateTruncation&) = default;
};

inline constexpr int kDefaultSeriesLength = 200;

/// g_k(x) = x^k + x^{k-1} + ... + x - 1.
IntPolynomial fibonacci_poly(AvoidanceParams params);

/// -x^k g_k(1/x) = x^k - x^{k-1} - ... - x - 1, whose largest root is phi_k.
IntPolynomial reciprocal_fibonacci_poly(AvoidanceParams params);

/// Generating function of the popularity of ones:
/// x * sum_{i=0}^{k-2} (i+1) x^i  over  g_k(x)^2.
RationalFunction pk_fraction(AvoidanceParams params);

/// Generating function of the total number of bits:
/// x * (sum_{i=0}^{k-2} (2i+2) x^i + sum_{i=k-1}^{2k-2} (2k-i-1) x^i)  over  g_k(x)^2.
RationalFunction tk_fraction(AvoidanceParams params);

/// F_k(x, 1) = (1 + x + ... + x^{k-1}) / (1 - x - ... - x^k).
RationalFunction word_count_fraction(AvoidanceParams params);

/// Coefficients 0..n_max of numerator/denominator. The denominator's
/// constant term must be +1 or -1 so every coefficient is an integer.
SeriesExpansion expand(const IntPolynomial& numerator, const IntPolynomial& denominator, int n_max);
SeriesExpansion expand(const RationalFunction& f, int n_max);

/// Solves F = sum_{i<k} x^i y^i + F * sum_{i<k} x^{i+1} y^i by fixed-point
/// iteration in truncated bivariate arithmetic.
BivariateTruncation expand_bivariate(AvoidanceParams params, int max_n);

/// Expands the closed form (1 - (xy)^k) / (1 - x - xy + x^{k+1} y^k), the
/// bivariate generating function with the common factor y cancelled.
BivariateTruncation expand_closed_form(AvoidanceParams params, int max_n);

/// True iff the closed form and the fixed point of the functional equation
/// agree on every coefficient up to x^max_n.
bool check_functional_equation(AvoidanceParams params, int max_n);

}  // namespace kfib
