#pragma once

#include <map>
#include <string>

#include "arbkk/interval.hpp"
#include "arbkk/rational.hpp"

namespace arbkk {

/// Exact real number sum_p c_p log p with rational c_p over primes p.
/// Zero coefficients are never stored, so equality is structural.
class LogReal {
 public:
  using Map = std::map<Int, Rat>;

  LogReal() = default;

  /// log|q| for rational q != 0, canonicalized by prime factorization.
  static LogReal log_of(const Rat& q);
  /// c * log p for a prime p (primality is not checked).
  static LogReal log_prime(const Int& p, const Rat& c = 1);

  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coefficient(const Int& p) const;

  LogReal operator+(const LogReal& o) const;
  LogReal operator-(const LogReal& o) const;
  LogReal operator-() const;
  LogReal& operator+=(const LogReal& o);
  LogReal& operator-=(const LogReal& o);
  bool operator==(const LogReal& o) const = default;

  /// Rigorous enclosure using `bits` of working precision.
  RatInterval enclose(int bits = 128) const;
  double approx() const;

 private:
  void add_term(const Int& p, const Rat& c);
  Map coeffs_;
};

LogReal operator*(const Rat& c, const LogReal& x);

/// Sign of a - b: -1, 0 or 1.  Refines the working precision until the sign
/// is certain; throws PrecisionError past the precision cap.
int logreal_compare(const LogReal& a, const LogReal& b);

LogReal logreal_max(const LogReal& a, const LogReal& b);
LogReal logreal_min(const LogReal& a, const LogReal& b);

/// Human readable form such as "2*log(2) - 1/3*log(5)" ("0" when zero).
std::string to_string(const LogReal& x);

}  // namespace arbkk
