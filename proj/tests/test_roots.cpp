#include <doctest.h>

#include <cmath>

#include "kfib/numerics.h"
#include "kfib/roots.h"

using namespace kfib;

TEST_CASE("quadratic case") {
  const ComplexRootSet s = all_roots(AvoidanceParams(2));
  REQUIRE(s.roots.size() == 2);
  const double golden = (1 + std::sqrt(5.0)) / 2;
  CHECK(s.roots[0].value.real() == doctest::Approx(golden).epsilon(1e-15));
  CHECK(s.roots[1].value.real() == doctest::Approx(-1 / golden).epsilon(1e-15));
  CHECK(std::abs(s.roots[0].value.imag()) < 1e-15);
}

TEST_CASE("root sets up to k = 32") {
  for (int k = 2; k <= kMaxRootDegree; ++k) {
    const ComplexRootSet s = all_roots(AvoidanceParams(k));
    REQUIRE(s.roots.size() == static_cast<std::size_t>(k));
    const double ph = phi(AvoidanceParams(k), 20).midpoint().get_d();
    CHECK(std::abs(s.roots.front().value - std::complex<double>(ph, 0)) < 1e-9);
    std::complex<double> sum = 0;
    for (const auto& r : s.roots) {
      CHECK(r.residual < kRootResidualTolerance);
      CHECK(r.error_radius < 1e-12);
      sum += r.value;
    }
    // Sum of roots of x^k - x^{k-1} - ... equals 1.
    CHECK(std::abs(sum - std::complex<double>(1, 0)) < 1e-12);
    for (std::size_t i = 1; i < s.roots.size(); ++i) {
      const double m = std::abs(s.roots[i].value);
      CHECK(m > std::pow(3.0, -1.0 / k) - 1e-9);
      CHECK(m < 1 + 1e-9);
    }
  }
}

TEST_CASE("root finder on other polynomials") {
  // (x - 1)(x - 2)(x - 3), non-monic scaling by 2.
  const auto roots = durand_kerner(IntPolynomial{-12, 22, -12, 2});
  std::vector<double> re;
  for (const auto& r : roots) re.push_back(r.value.real());
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(1.0));
  CHECK(re[1] == doctest::Approx(2.0));
  CHECK(re[2] == doctest::Approx(3.0));

  CHECK_THROWS_AS(durand_kerner(IntPolynomial{5}), InvalidArgument);
  CHECK_THROWS_AS(all_roots(AvoidanceParams(33)), InvalidArgument);
}
