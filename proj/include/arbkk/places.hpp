#pragma once

#include <string>
#include <vector>

#include "arbkk/laurent.hpp"
#include "arbkk/logreal.hpp"

namespace arbkk {

/// A place of Q: the Archimedean absolute value or the p-adic one.
class Place {
 public:
  static Place infinity() { return Place(Int(0)); }
  /// Throws DomainError unless p is prime.
  static Place prime(const Int& p);

  bool is_archimedean() const { return p_ == 0; }
  /// The prime; 0 for the Archimedean place.
  const Int& p() const { return p_; }
  Rat weight() const { return 1; }

  bool operator==(const Place& o) const { return p_ == o.p_; }
  /// Archimedean first, then primes ascending.
  bool operator<(const Place& o) const { return p_ < o.p_; }

 private:
  explicit Place(Int p) : p_(std::move(p)) {}
  Int p_;
};

std::string to_string(const Place& v);

using TorusPoint = RatVector;

/// p-adic order of a nonzero rational.
long ord_p(const Rat& q, const Int& p);

/// |q|_v as an exact rational.
Rat abs_v(const Rat& q, const Place& v);

/// log|q|_v for q != 0.
LogReal log_abs_v(const Rat& q, const Place& v);

/// Infinity plus every prime dividing a numerator or denominator of the data.
std::vector<Place> relevant_places(const std::vector<LaurentPoly>& polys,
                                   const std::vector<Rat>& numbers = {});

/// Archimedean: log of the l1 norm of the coefficients; p-adic: log of the
/// max of the p-adic absolute values.
LogReal length_v(const std::vector<Rat>& coeffs, const Place& v);
LogReal length_v(const LaurentPoly& f, const Place& v);

/// Sum of length_v over all places.
LogReal length(const std::vector<Rat>& coeffs);
LogReal length(const LaurentPoly& f);

/// Componentwise -log|x_i|_v.
std::vector<LogReal> val_v(const TorusPoint& x, const Place& v);

}  // namespace arbkk
