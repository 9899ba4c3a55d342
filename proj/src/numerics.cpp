#include "kfib/numerics.h"

#include <functional>

#include "kfib/series.h"

namespace kfib {

namespace {

void require_digits(int digits) {
  if (digits < 1) throw InvalidArgument("precision_digits must be >= 1, got " + std::to_string(digits));
}

// Sign of p(a / 2^bits) * 2^(bits*deg), exactly.
int sign_at_dyadic(const IntPolynomial& p, const BigInt& a, unsigned long bits) {
  const auto& c = p.coeffs();
  const int deg = p.degree();
  BigInt acc = c[deg];
  BigInt scale = 1;
  for (int i = deg - 1; i >= 0; --i) {
    scale <<= bits;
    acc = acc * a + c[i] * scale;
  }
  return sgn(acc);
}

// Interval image of sum_j coeff[j] x^j for x > 0 (each power is monotone).
RealEnclosure evaluate_positive(const std::vector<std::pair<long, unsigned long>>& terms, const RealEnclosure& x) {
  RealEnclosure acc(ExactRational(0));
  for (const auto& [coeff, power] : terms) acc = acc + ExactRational(coeff) * x.pow(power);
  return acc;
}

RealEnclosure evaluate_positive(const IntPolynomial& p, const RealEnclosure& x) {
  RealEnclosure acc(ExactRational(0));
  for (int j = 0; j <= p.degree(); ++j) {
    if (p.coeffs()[j] == 0) continue;
    acc = acc + ExactRational(p.coeffs()[j]) * x.pow(static_cast<unsigned long>(j));
  }
  return acc;
}

// Recomputes `eval(bits)` with doubling working precision until `good` accepts.
RealEnclosure escalate(int precision_digits, const std::function<RealEnclosure(unsigned long)>& eval,
                       const std::function<bool(const RealEnclosure&)>& good) {
  unsigned long bits = bits_for_digits(precision_digits + kGuardDigits);
  for (int attempt = 0; attempt <= kMaxPrecisionDoublings; ++attempt) {
    RealEnclosure e = eval(bits);
    if (good(e)) return e;
    bits *= 2;
  }
  throw ConvergenceError("enclosure did not reach " + std::to_string(precision_digits) +
                         " digits within the precision budget");
}

RealEnclosure inverse_phi_bits(AvoidanceParams params, unsigned long bits) {
  // phi in [1, 2] so 1/phi loses at most one bit of absolute width.
  return phi_bits(params, bits + 1).reciprocal().round_outward(bits + 2);
}

}  // namespace

RealEnclosure phi_bits(AvoidanceParams params, unsigned long bits) {
  const IntPolynomial r = reciprocal_fibonacci_poly(params);
  // Bracket [a/2^b, (a+1)/2^b], starting from [1, 2]: r(1) = 1 - k < 0, r(2) = 1 > 0,
  // and Descartes' rule gives a single positive root.
  BigInt a = 1;
  for (unsigned long b = 0; b < bits; ++b) {
    const BigInt mid = 2 * a + 1;
    const int s = sign_at_dyadic(r, mid, b + 1);
    if (s == 0) {
      return RealEnclosure(make_rational(mid, BigInt(1) << (b + 1)));
    }
    a = s < 0 ? mid : BigInt(2 * a);
  }
  const BigInt scale = BigInt(1) << bits;
  return {make_rational(a, scale), make_rational(a + 1, scale)};
}

RealEnclosure phi(AvoidanceParams params, int precision_digits) {
  require_digits(precision_digits);
  return phi_bits(params, bits_for_digits(precision_digits));
}

RealEnclosure inverse_phi(AvoidanceParams params, int precision_digits) {
  require_digits(precision_digits);
  return inverse_phi_bits(params, bits_for_digits(precision_digits));
}

RealEnclosure limit_value(AvoidanceParams params, int precision_digits) {
  require_digits(precision_digits);
  const long k = params.k();
  const unsigned long uk = static_cast<unsigned long>(k);
  // (k-1) x^k - k x^{k-1} + 1  over  x^{2k} + (k-3) x^k - k x^{k-1} + 2
  const std::vector<std::pair<long, unsigned long>> num = {{k - 1, uk}, {-k, uk - 1}, {1, 0}};
  const std::vector<std::pair<long, unsigned long>> den = {{1, 2 * uk}, {k - 3, uk}, {-k, uk - 1}, {2, 0}};
  const ExactRational target = decimal_ulp(precision_digits);
  return escalate(
      precision_digits,
      [&](unsigned long bits) {
        const RealEnclosure x = inverse_phi_bits(params, bits);
        return (evaluate_positive(num, x) / evaluate_positive(den, x)).round_outward(bits + 8);
      },
      [&](const RealEnclosure& e) { return e.width() < target; });
}

RealEnclosure limit_value_from_numerators(AvoidanceParams params, int precision_digits) {
  require_digits(precision_digits);
  const IntPolynomial p_num = pk_fraction(params).numerator;
  const IntPolynomial t_num = tk_fraction(params).numerator;
  const ExactRational target = decimal_ulp(precision_digits);
  return escalate(
      precision_digits,
      [&](unsigned long bits) {
        const RealEnclosure x = inverse_phi_bits(params, bits);
        return (evaluate_positive(p_num, x) / evaluate_positive(t_num, x)).round_outward(bits + 8);
      },
      [&](const RealEnclosure& e) { return e.width() < target; });
}

AsymptoticEstimate asymptotic_coefficient(AvoidanceParams params, SeriesTarget target, long n,
                                          int precision_digits) {
  require_digits(precision_digits);
  if (n < 1) throw InvalidArgument("asymptotic estimate needs n >= 1, got " + std::to_string(n));

  const IntPolynomial numer =
      target == SeriesTarget::Popularity ? pk_fraction(params).numerator : tk_fraction(params).numerator;
  const IntPolynomial g_prime = fibonacci_poly(params).derivative();
  const ExactRational rel = decimal_ulp(precision_digits);

  // Relative width grows like (n + 2) times that of phi.
  unsigned long extra_bits = 0;
  for (long m = n + 2; m > 0; m >>= 1) ++extra_bits;

  const RealEnclosure value = escalate(
      precision_digits,
      [&](unsigned long bits) {
        const RealEnclosure ph = phi_bits(params, bits + extra_bits);
        const RealEnclosure x = ph.reciprocal();
        const RealEnclosure gp = evaluate_positive(g_prime, x);
        // 2 n phi^{n+2} numer(x) / (2 g'(x)^2)
        return ExactRational(n) * ph.pow(static_cast<unsigned long>(n + 2)) * evaluate_positive(numer, x) /
               (gp * gp);
      },
      [&](const RealEnclosure& e) { return e.is_positive() && e.width() < rel * e.lo(); });
  return {params.k(), target, n, value};
}

std::vector<std::pair<int, RealEnclosure>> corollary_check(int k_max, int precision_digits) {
  if (k_max < 2) throw InvalidArgument("k_max must be >= 2");
  std::vector<std::pair<int, RealEnclosure>> out(k_max - 1);
#pragma omp parallel for schedule(dynamic)
  for (int k = 2; k <= k_max; ++k) {
    out[k - 2] = {k, limit_value(AvoidanceParams(k), precision_digits)};
  }
  return out;
}

std::vector<std::pair<int, RealEnclosure>> corollary_check_serial(int k_max, int precision_digits) {
  if (k_max < 2) throw InvalidArgument("k_max must be >= 2");
  std::vector<std::pair<int, RealEnclosure>> out;
  for (int k = 2; k <= k_max; ++k) out.emplace_back(k, limit_value(AvoidanceParams(k), precision_digits));
  return out;
}

namespace {

std::string certified_string(const std::function<RealEnclosure(int)>& enclose, int digits, const char* what) {
  for (int extra = 1; extra <= (1 << kMaxPrecisionDoublings); extra *= 2) {
    if (auto s = certified_decimal(enclose(digits + extra), digits)) return *s;
  }
  throw ConvergenceError(std::string("could not certify the rounding of ") + what);
}

}  // namespace

std::string limit_decimal(AvoidanceParams params, int digits) {
  return certified_string([&](int d) { return limit_value(params, d); }, digits, "the limit value");
}

std::string phi_decimal(AvoidanceParams params, int digits) {
  return certified_string([&](int d) { return phi(params, d); }, digits, "phi");
}

std::string inverse_phi_decimal(AvoidanceParams params, int digits) {
  return certified_string([&](int d) { return inverse_phi(params, d); }, digits, "1/phi");
}

}  // namespace kfib
