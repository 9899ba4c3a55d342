#include "kfib/roots.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kfib/series.h"

namespace kfib {

namespace {

constexpr int kDoubleIterations = 500;
constexpr int kPolishIterations = 8;
constexpr mp_bitcnt_t kPolishBits = 256;

// Minimal complex arithmetic over mpf_class; std::complex is only specified
// for the built-in floating types.
struct MpComplex {
  mpf_class re{0, kPolishBits};
  mpf_class im{0, kPolishBits};

  MpComplex() = default;
  MpComplex(const mpf_class& r, const mpf_class& i) : re(r, kPolishBits), im(i, kPolishBits) {}
  explicit MpComplex(std::complex<double> z) : re(z.real(), kPolishBits), im(z.imag(), kPolishBits) {}

  friend MpComplex operator+(const MpComplex& a, const MpComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend MpComplex operator-(const MpComplex& a, const MpComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
    return {mpf_class(a.re * b.re - a.im * b.im, kPolishBits), mpf_class(a.re * b.im + a.im * b.re, kPolishBits)};
  }
  friend MpComplex operator/(const MpComplex& a, const MpComplex& b) {
    const mpf_class d(b.re * b.re + b.im * b.im, kPolishBits);
    return {mpf_class((a.re * b.re + a.im * b.im) / d, kPolishBits), mpf_class((a.im * b.re - a.re * b.im) / d, kPolishBits)};
  }
  mpf_class abs() const { return sqrt(mpf_class(re * re + im * im, kPolishBits)); }
  std::complex<double> to_double() const { return {re.get_d(), im.get_d()}; }
};

template <class C>
C horner(const std::vector<C>& coeffs, const C& z) {
  C acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

// One Jacobi-style Weierstrass sweep: every correction uses the previous
// iterate only, so the roots update independently.
template <class C>
void weierstrass_corrections(const std::vector<C>& coeffs, const std::vector<C>& z, std::vector<C>& w) {
  const int n = static_cast<int>(z.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    C denom = coeffs.back();
    for (int j = 0; j < n; ++j) {
      if (j != i) denom = denom * (z[i] - z[j]);
    }
    w[i] = horner(coeffs, z[i]) / denom;
  }
}

}  // namespace

std::vector<ApproximateRoot> durand_kerner(const IntPolynomial& poly) {
  const int deg = poly.degree();
  if (deg < 1) throw InvalidArgument("root finding needs a polynomial of degree >= 1");

  std::vector<std::complex<double>> cd;
  for (const auto& c : poly.coeffs()) cd.emplace_back(c.get_d(), 0.0);

  std::vector<std::complex<double>> z(deg), w(deg);
  constexpr double kRadius = 1.5;
  constexpr double kRotation = 0.4;
  for (int j = 0; j < deg; ++j) {
    z[j] = std::polar(kRadius, 2.0 * std::numbers::pi * j / deg + kRotation);
  }

  for (int it = 0; it < kDoubleIterations; ++it) {
    weierstrass_corrections(cd, z, w);
    double largest = 0.0;
    for (int i = 0; i < deg; ++i) {
      z[i] -= w[i];
      largest = std::max(largest, std::abs(w[i]) / std::max(1.0, std::abs(z[i])));
    }
    if (largest < 1e-14) break;
  }

  // Finish in multiprecision, where the residual is not swamped by rounding.
  std::vector<MpComplex> cm;
  for (const auto& c : poly.coeffs()) cm.emplace_back(mpf_class(c, kPolishBits), mpf_class(0, kPolishBits));
  std::vector<MpComplex> zm, wm(deg);
  for (const auto& v : z) zm.emplace_back(v);
  for (int it = 0; it < kPolishIterations; ++it) {
    weierstrass_corrections(cm, zm, wm);
    for (int i = 0; i < deg; ++i) zm[i] = zm[i] - wm[i];
  }
  weierstrass_corrections(cm, zm, wm);

  std::vector<ApproximateRoot> out(deg);
  for (int i = 0; i < deg; ++i) {
    out[i].value = zm[i].to_double();
    out[i].residual = horner(cm, zm[i]).abs().get_d();
    out[i].error_radius = deg * wm[i].abs().get_d();
    if (!(out[i].residual < kRootResidualTolerance)) {
      throw ConvergenceError("root iteration did not converge: residual " + std::to_string(out[i].residual));
    }
  }
  return out;
}

ComplexRootSet all_roots(AvoidanceParams params) {
  if (params.k() > kMaxRootDegree) {
    throw InvalidArgument("all_roots supports k <= " + std::to_string(kMaxRootDegree));
  }
  ComplexRootSet set{params.k(), durand_kerner(reciprocal_fibonacci_poly(params))};
  std::stable_sort(set.roots.begin(), set.roots.end(), [](const ApproximateRoot& a, const ApproximateRoot& b) {
    return std::abs(a.value) > std::abs(b.value);
  });
  return set;
}

}  // namespace kfib
