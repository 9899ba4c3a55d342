#pragma once

#include <complex>
#include <vector>

#include "kfib/polynomial.h"

namespace kfib {

/// One approximate root of a polynomial.
struct ApproximateRoot {
  std::complex<double> value;
  /// |p(value)|, evaluated in extended precision.
  double residual = 0.0;
  /// The disk of this radius around value contains a true root (Weierstrass
  /// inclusion radius deg * |W_i|; meaningful once the disks are disjoint).
  double error_radius = 0.0;
};

/// All complex roots of a polynomial.
struct ComplexRootSet {
  int k = 2;
  std::vector<ApproximateRoot> roots;  // sorted by decreasing modulus
};

inline constexpr int kMaxRootDegree = 32;
inline constexpr double kRootResidualTolerance = 1e-12;

/// Simultaneous (Durand-Kerner) iteration for all roots of poly, started from
/// deg points on |z| = 1.5 with a fixed rotation. Throws ConvergenceError if
/// the residuals do not fall below kRootResidualTolerance.
std::vector<ApproximateRoot> durand_kerner(const IntPolynomial& poly);

/// Roots of x^k - x^{k-1} - ... - x - 1 for 2 <= k <= 32.
ComplexRootSet all_roots(AvoidanceParams params);

}  // namespace kfib
