#include "kfib/enclosure.h"

#include <algorithm>
#include <cmath>

namespace kfib {

namespace {

BigInt pow10(int digits) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return p;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

RealEnclosure::RealEnclosure(ExactRational lo, ExactRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw InvalidArgument("enclosure with lo > hi");
}

RealEnclosure RealEnclosure::round_outward(unsigned long bits) const {
  BigInt scale = 1;
  scale <<= bits;
  const BigInt lo_num = floor_div(lo_.get_num() * scale, lo_.get_den());
  const BigInt hi_num = ceil_div(hi_.get_num() * scale, hi_.get_den());
  return {make_rational(lo_num, scale), make_rational(hi_num, scale)};
}

RealEnclosure RealEnclosure::hull(const RealEnclosure& other) const {
  return {std::min(lo_, other.lo_), std::max(hi_, other.hi_)};
}

RealEnclosure RealEnclosure::pow(unsigned long e) const {
  if (e == 0) return RealEnclosure(ExactRational(1));
  if (lo_ >= 0) {
    // Monotone on the nonnegative axis: exact image.
    ExactRational l, h;
    mpz_class ln, ld, hn, hd;
    mpz_pow_ui(ln.get_mpz_t(), lo_.get_num_mpz_t(), e);
    mpz_pow_ui(ld.get_mpz_t(), lo_.get_den_mpz_t(), e);
    mpz_pow_ui(hn.get_mpz_t(), hi_.get_num_mpz_t(), e);
    mpz_pow_ui(hd.get_mpz_t(), hi_.get_den_mpz_t(), e);
    return {make_rational(ln, ld), make_rational(hn, hd)};
  }
  RealEnclosure acc(ExactRational(1));
  for (unsigned long i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

RealEnclosure RealEnclosure::reciprocal() const {
  if (contains_zero()) throw InvalidArgument("reciprocal of an enclosure containing zero");
  return {1 / hi_, 1 / lo_};
}

RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }

RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }

RealEnclosure operator-(const RealEnclosure& a) { return {-a.hi_, -a.lo_}; }

RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b) {
  const ExactRational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b) { return a * b.reciprocal(); }

RealEnclosure operator*(const ExactRational& s, const RealEnclosure& a) {
  if (s >= 0) return {s * a.lo_, s * a.hi_};
  return {s * a.hi_, s * a.lo_};
}

ExactRational decimal_ulp(int digits) { return make_rational(1, pow10(digits)); }

unsigned long bits_for_digits(int digits) {
  return static_cast<unsigned long>(std::ceil(digits * std::log2(10.0))) + 1;
}

std::string round_decimal(const ExactRational& x, int digits) {
  if (digits < 0) throw InvalidArgument("digits must be >= 0");
  const BigInt scale = pow10(digits);
  const BigInt num = abs(x.get_num()) * scale;
  const BigInt& den = x.get_den();
  BigInt q = floor_div(num, den);
  const BigInt twice_rem = 2 * (num - q * den);
  if (twice_rem > den || (twice_rem == den && q % 2 != 0)) q += 1;

  std::string s = q.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (x < 0 && q != 0) s.insert(0, "-");
  return s;
}

std::optional<std::string> certified_decimal(const RealEnclosure& e, int digits) {
  // Half-even rounding is monotone, so agreement at both endpoints
  // certifies every point in between.
  std::string lo = round_decimal(e.lo(), digits);
  if (lo != round_decimal(e.hi(), digits)) return std::nullopt;
  return lo;
}

}  // namespace kfib
