#pragma once

#include <string>

#include "arbkk/rational.hpp"

namespace arbkk {

/// Closed interval of doubles with outward rounding after every operation.
struct Interval {
  double lo = 0, hi = 0;

  Interval() = default;
  Interval(double v) : lo(v), hi(v) {}  // NOLINT(google-explicit-constructor)
  Interval(double l, double h);

  static Interval from_rat(const Rat& q);

  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool is_finite() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval exp(const Interval& a);
/// Requires a.lo > 0.
Interval log(const Interval& a);

/// Interval with exact rational end points.
struct RatInterval {
  Rat lo, hi;

  RatInterval() = default;
  RatInterval(const Rat& v) : lo(v), hi(v) {}  // NOLINT(google-explicit-constructor)
  RatInterval(Rat l, Rat h);

  Rat width() const { return hi - lo; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const Rat& c, const RatInterval& a);

/// Enclosure of log q for rational q > 0, with end points of `bits` precision.
RatInterval log_enclosure(const Rat& q, int bits = 128);

/// Decimal rendering rounded toward -inf / +inf with `digits` significant digits.
std::string decimal_down(const Rat& q, int digits = 12);
std::string decimal_up(const Rat& q, int digits = 12);
std::string decimal_nearest(const Rat& q, int digits = 12);
/// "[lo, hi]" rounded outward.
std::string interval_string(const RatInterval& r, int digits = 12);

}  // namespace arbkk
