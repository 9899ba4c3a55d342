#pragma once

#include <optional>
#include <string>

#include "kfib/params.h"

namespace kfib {

/// A closed interval [lo, hi] with exact rational endpoints that is
/// guaranteed to contain some real quantity. Arithmetic is exact on the
/// endpoints; round_outward() trades tightness for endpoint size.
class RealEnclosure {
 public:
  RealEnclosure() = default;
  explicit RealEnclosure(const ExactRational& point) : lo_(point), hi_(point) {}
  RealEnclosure(ExactRational lo, ExactRational hi);

  const ExactRational& lo() const noexcept { return lo_; }
  const ExactRational& hi() const noexcept { return hi_; }
  ExactRational width() const { return hi_ - lo_; }
  ExactRational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const ExactRational& x) const { return lo_ <= x && x <= hi_; }
  /// True iff other lies inside this interval.
  bool contains(const RealEnclosure& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool overlaps(const RealEnclosure& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
  bool is_positive() const { return lo_ > 0; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }

  /// Widens to endpoints that are multiples of 2^-bits.
  RealEnclosure round_outward(unsigned long bits) const;
  /// Smallest interval containing both.
  RealEnclosure hull(const RealEnclosure& other) const;

  /// x^e for a nonnegative integer exponent.
  RealEnclosure pow(unsigned long e) const;
  /// 1/x; throws InvalidArgument if the interval contains zero.
  RealEnclosure reciprocal() const;

  friend RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure operator-(const RealEnclosure& a);
  friend RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure operator*(const ExactRational& s, const RealEnclosure& a);
  friend bool operator==(const RealEnclosure& a, const RealEnclosure& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

 private:
  ExactRational lo_;
  ExactRational hi_;
};

/// Rounds an exact rational to `digits` decimals, ties to even.
std::string round_decimal(const ExactRational& x, int digits);

/// The correctly rounded `digits`-decimal string shared by every point of the
/// enclosure, or nullopt when the interval straddles a rounding boundary.
std::optional<std::string> certified_decimal(const RealEnclosure& e, int digits);

/// 10^-digits as an exact rational.
ExactRational decimal_ulp(int digits);

/// Bits b with 2^-b <= 10^-digits.
unsigned long bits_for_digits(int digits);

}  // namespace kfib
