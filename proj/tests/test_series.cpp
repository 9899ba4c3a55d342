#include <doctest.h>

#include <random>

#include "kfib/combinatorics.h"
#include "kfib/reference_data.h"
#include "kfib/series.h"

using namespace kfib;

TEST_CASE("IntPolynomial basics") {
  const IntPolynomial p{-1, 1, 1};
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "x^2 + x - 1");
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(p.derivative() == IntPolynomial{1, 2});
  CHECK(p.evaluate(ExactRational(2)) == 5);
  CHECK((p * IntPolynomial{1, 1}) == IntPolynomial{-1, 0, 2, 1});
  CHECK((p - p).is_zero());
  CHECK(IntPolynomial{0, -3, 0, 1}.to_string() == "x^3 - 3x");
}

TEST_CASE("fibonacci polynomials") {
  CHECK(fibonacci_poly(AvoidanceParams(2)) == IntPolynomial{-1, 1, 1});
  CHECK(fibonacci_poly(AvoidanceParams(3)) == IntPolynomial{-1, 1, 1, 1});
  CHECK(reciprocal_fibonacci_poly(AvoidanceParams(2)) == IntPolynomial{-1, -1, 1});
  CHECK(reciprocal_fibonacci_poly(AvoidanceParams(2)).to_string() == "x^2 - x - 1");

  // -x^k g_k(1/x) is the reciprocal polynomial: coefficients reversed and negated.
  for (int k = 2; k <= 10; ++k) {
    const auto g = fibonacci_poly(AvoidanceParams(k)).coeffs();
    const auto r = reciprocal_fibonacci_poly(AvoidanceParams(k)).coeffs();
    for (int i = 0; i <= k; ++i) CHECK(r[i] == -g[k - i]);
  }
}

TEST_CASE("P_k and T_k fractions") {
  const IntPolynomial g2 = fibonacci_poly(AvoidanceParams(2));
  CHECK(pk_fraction(AvoidanceParams(2)).numerator == IntPolynomial{0, 1});
  CHECK(pk_fraction(AvoidanceParams(2)).denominator == g2 * g2);
  CHECK(pk_fraction(AvoidanceParams(3)).numerator == IntPolynomial{0, 1, 2});
  CHECK(pk_fraction(AvoidanceParams(4)).numerator == IntPolynomial{0, 1, 2, 3});
  CHECK(tk_fraction(AvoidanceParams(2)).numerator == IntPolynomial{0, 2, 2, 1});
  CHECK(tk_fraction(AvoidanceParams(2)).denominator == g2 * g2);

  CHECK(expand(tk_fraction(AvoidanceParams(2)), 4).coeffs[4] == 32);
  CHECK(expand(tk_fraction(AvoidanceParams(3)), 4).coeffs[4] == 52);
  CHECK(expand(pk_fraction(AvoidanceParams(2)), 4).coeffs[4] == 10);
  CHECK(expand(pk_fraction(AvoidanceParams(3)), 4).coeffs[4] == 22);
}

TEST_CASE("expand") {
  CHECK(expand(IntPolynomial{0, 1}, IntPolynomial{1, -1}, 3).coeffs == std::vector<BigInt>{0, 1, 1, 1});
  // 1 / (-1 + x) = -1 - x - x^2 - ...
  CHECK(expand(IntPolynomial{1}, IntPolynomial{-1, 1}, 2).coeffs == std::vector<BigInt>{-1, -1, -1});
  CHECK_THROWS_AS(expand(IntPolynomial{1}, IntPolynomial{2, 1}, 3), InvalidArgument);
  CHECK_THROWS_AS(expand(IntPolynomial{1}, IntPolynomial{0, 1}, 3), InvalidArgument);
  CHECK(expand(IntPolynomial{5}, IntPolynomial{1}, 0).coeffs == std::vector<BigInt>{5});
}

TEST_CASE("expansion satisfies the convolution identity") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigInt> num(deg(rng) + 1), den(deg(rng) + 1);
    for (auto& c : num) c = coef(rng);
    for (auto& c : den) c = coef(rng);
    den[0] = trial % 2 ? 1 : -1;
    const IntPolynomial N(num), D(den);
    const int n_max = 40;
    const SeriesExpansion s = expand(N, D, n_max);
    for (int n = 0; n <= n_max; ++n) {
      BigInt acc = 0;
      for (int j = 0; j <= std::min(n, D.degree()); ++j) acc += D.coeffs()[j] * s.coeffs[n - j];
      CHECK(acc == N.coeff(n));
    }
  }
}

TEST_CASE("series coefficients against exact counts") {
  for (int k = 2; k <= 6; ++k) {
    const AvoidanceParams p(k);
    const auto pk = expand(pk_fraction(p), 100);
    const auto tk = expand(tk_fraction(p), 100);
    const auto fk = expand(word_count_fraction(p), 100);
    for (int n = 0; n <= 100; ++n) {
      CHECK(pk.coeffs[n] == popularity(n, p));
      CHECK(tk.coeffs[n] == count_words(n, p) * n);
      CHECK(fk.coeffs[n] == count_words(n, p));
      // T_k = x d/dx F_k(x, 1), termwise.
      CHECK(tk.coeffs[n] == fk.coeffs[n] * n);
    }
  }
}

TEST_CASE("bivariate expansion") {
  const auto t2 = expand_bivariate(AvoidanceParams(2), 9);
  const auto t3 = expand_bivariate(AvoidanceParams(3), 9);
  CHECK(t2.table[4][2] == 3);
  CHECK(t3.table[7][5] == 3);
  for (int n = 0; n <= 9; ++n) {
    CHECK(t2.table[n][0] == 1);
    CHECK(t3.table[n][0] == 1);
  }

  // Cell-for-cell against the reference triangles (rows m, columns n = 1..9).
  for (int n = 1; n <= 9; ++n) {
    for (std::size_t m = 0; m < reference::kTriangleK2.size(); ++m) {
      const BigInt cell = m <= static_cast<std::size_t>(n) ? t2.table[n][m] : BigInt(0);
      CHECK(cell == reference::kTriangleK2[m][n - 1]);
    }
    for (std::size_t m = 0; m < reference::kTriangleK3.size(); ++m) {
      const BigInt cell = m <= static_cast<std::size_t>(n) ? t3.table[n][m] : BigInt(0);
      CHECK(cell == reference::kTriangleK3[m][n - 1]);
    }
  }

  for (int k = 2; k <= 5; ++k) {
    const AvoidanceParams p(k);
    const auto t = expand_bivariate(p, 25);
    const auto pk = expand(pk_fraction(p), 25);
    for (int n = 0; n <= 25; ++n) {
      const OnesDistribution d = ones_distribution(n, p);
      BigInt weighted = 0;
      for (int m = 0; m <= n; ++m) {
        CHECK(t.table[n][m] == d.at(m));
        weighted += t.table[n][m] * m;
        if (m > n - n / k) CHECK(t.table[n][m] == 0);
      }
      // d/dy at y = 1 gives the popularity series.
      CHECK(weighted == pk.coeffs[n]);
    }
  }
}

TEST_CASE("functional equation") {
  CHECK(check_functional_equation(AvoidanceParams(2), 9));
  CHECK(check_functional_equation(AvoidanceParams(3), 9));
  CHECK(check_functional_equation(AvoidanceParams(2), 0));
  for (int k = 2; k <= 8; ++k) CHECK(check_functional_equation(AvoidanceParams(k), 30));
  CHECK(expand_closed_form(AvoidanceParams(3), 9) == expand_bivariate(AvoidanceParams(3), 9));
}
