#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "kfib/params.h"

namespace kfib {

/// Dense polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of x^i; the leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient vector).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  /// The monomial c * x^degree.
  static IntPolynomial monomial(BigInt c, int degree);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i, zero past the degree.
  BigInt coeff(int i) const;

  IntPolynomial derivative() const;
  ExactRational evaluate(const ExactRational& x) const;
  double evaluate(double x) const;

  /// Human-readable form, highest degree first, e.g. "x^2 + x - 1".
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

}  // namespace kfib
