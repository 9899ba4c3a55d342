#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kfib {

/// Arbitrary-precision natural number (counts and popularities).
using BigNat = mpz_class;
/// Arbitrary-precision signed integer (polynomial and series coefficients).
using BigInt = mpz_class;
/// Exact rational, kept in lowest terms with a positive denominator.
using ExactRational = mpq_class;

/// Raised for out-of-domain arguments (k < 2, n < 0, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a brute-force request exceeds its fixed size budget.
class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised when a quantity has no defined value (e.g. the bit expectation at n = 0).
class UndefinedValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an iterative method fails to reach its target.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The forbidden run length: words may not contain k consecutive 1s.
class AvoidanceParams {
 public:
  explicit AvoidanceParams(int k) : k_(k) {
    if (k < 2) {
      throw InvalidArgument("forbidden run length k must be >= 2, got " + std::to_string(k));
    }
  }

  int k() const noexcept { return k_; }

  friend bool operator==(AvoidanceParams, AvoidanceParams) = default;

 private:
  int k_;
};

inline void require_length(long n, const char* what = "n") {
  if (n < 0) {
    throw InvalidArgument(std::string(what) + " must be >= 0, got " + std::to_string(n));
  }
}

/// Builds a rational from integer parts and normalizes it.
inline ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw InvalidArgument("zero denominator");
  }
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace kfib
