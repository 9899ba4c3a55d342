#include "kfib/series.h"

#include <string>
#include <utility>

namespace kfib {

namespace {

using Table = std::vector<std::vector<BigInt>>;

Table zero_table(int max_n) {
  Table t(max_n + 1);
  for (int n = 0; n <= max_n; ++n) t[n].assign(n + 1, BigInt(0));
  return t;
}

}  // namespace

IntPolynomial fibonacci_poly(AvoidanceParams params) {
  std::vector<BigInt> c(params.k() + 1, BigInt(1));
  c[0] = -1;
  return IntPolynomial(std::move(c));
}

IntPolynomial reciprocal_fibonacci_poly(AvoidanceParams params) {
  std::vector<BigInt> c(params.k() + 1, BigInt(-1));
  c[params.k()] = 1;
  return IntPolynomial(std::move(c));
}

RationalFunction pk_fraction(AvoidanceParams params) {
  const int k = params.k();
  std::vector<BigInt> num(k, BigInt(0));
  for (int i = 0; i <= k - 2; ++i) num[i + 1] = i + 1;
  const IntPolynomial g = fibonacci_poly(params);
  return {IntPolynomial(std::move(num)), g * g};
}

RationalFunction tk_fraction(AvoidanceParams params) {
  const int k = params.k();
  std::vector<BigInt> num(2 * k, BigInt(0));
  for (int i = 0; i <= k - 2; ++i) num[i + 1] = 2 * i + 2;
  for (int i = k - 1; i <= 2 * k - 2; ++i) num[i + 1] = 2 * k - i - 1;
  const IntPolynomial g = fibonacci_poly(params);
  return {IntPolynomial(std::move(num)), g * g};
}

RationalFunction word_count_fraction(AvoidanceParams params) {
  const int k = params.k();
  std::vector<BigInt> num(k, BigInt(1));
  std::vector<BigInt> den(k + 1, BigInt(-1));
  den[0] = 1;
  return {IntPolynomial(std::move(num)), IntPolynomial(std::move(den))};
}

SeriesExpansion expand(const IntPolynomial& numerator, const IntPolynomial& denominator, int n_max) {
  require_length(n_max, "series length");
  const BigInt d0 = denominator.coeff(0);
  if (d0 != 1 && d0 != -1) {
    throw InvalidArgument("series denominator must have constant term +1 or -1");
  }
  SeriesExpansion s{numerator, denominator, std::vector<BigInt>(n_max + 1)};
  const int dd = denominator.degree();
  for (int n = 0; n <= n_max; ++n) {
    BigInt acc = numerator.coeff(n);
    for (int j = 1; j <= std::min(n, dd); ++j) acc -= denominator.coeffs()[j] * s.coeffs[n - j];
    s.coeffs[n] = d0 == 1 ? acc : BigInt(-acc);
  }
  return s;
}

SeriesExpansion expand(const RationalFunction& f, int n_max) {
  return expand(f.numerator, f.denominator, n_max);
}

BivariateTruncation expand_bivariate(AvoidanceParams params, int max_n) {
  require_length(max_n, "max_n");
  const int k = params.k();

  // Every iteration fixes at least one more x-degree, so max_n + 1 rounds
  // reach the fixed point; one more confirms it.
  Table f = zero_table(max_n);
  for (int round = 0; round <= max_n + 1; ++round) {
    Table next = zero_table(max_n);
    for (int i = 0; i < k && i <= max_n; ++i) next[i][i] += 1;
    for (int n = 0; n <= max_n; ++n) {
      for (int m = 0; m <= n; ++m) {
        const BigInt& c = f[n][m];
        if (c == 0) continue;
        // times x^{i+1} y^i
        for (int i = 0; i < k && n + i + 1 <= max_n; ++i) next[n + i + 1][m + i] += c;
      }
    }
    if (next == f) break;
    f = std::move(next);
  }
  return {max_n, std::move(f)};
}

BivariateTruncation expand_closed_form(AvoidanceParams params, int max_n) {
  require_length(max_n, "max_n");
  const int k = params.k();

  // Coefficients in x are polynomials in y. Numerator 1 - x^k y^k;
  // denominator 1 - (1 + y) x + y^k x^{k+1}, constant term 1.
  Table c = zero_table(max_n);
  for (int n = 0; n <= max_n; ++n) {
    if (n == 0) c[0][0] += 1;
    if (n == k) c[n][k] -= 1;
    if (n >= 1) {
      for (int m = 0; m <= n - 1; ++m) {
        c[n][m] += c[n - 1][m];
        c[n][m + 1] += c[n - 1][m];
      }
    }
    if (n >= k + 1) {
      for (int m = 0; m <= n - k - 1; ++m) c[n][m + k] -= c[n - k - 1][m];
    }
  }
  return {max_n, std::move(c)};
}

bool check_functional_equation(AvoidanceParams params, int max_n) {
  return expand_closed_form(params, max_n) == expand_bivariate(params, max_n);
}

}  // namespace kfib
