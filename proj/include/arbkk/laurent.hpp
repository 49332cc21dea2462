#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "arbkk/polytope.hpp"
#include "arbkk/rational.hpp"

namespace arbkk {

/// Laurent polynomial in x1..xn with rational coefficients.  Terms are kept
/// in ascending lexicographic order of exponents and never store zeros.
class LaurentPoly {
 public:
  using Terms = std::map<LatticeVector, Rat>;

  explicit LaurentPoly(int n = 0) : n_(n) {}
  LaurentPoly(int n, Terms terms);

  static LaurentPoly monomial(const LatticeVector& exponent, const Rat& coeff);
  static LaurentPoly constant(int n, const Rat& c);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::vector<LatticeVector> exponents() const;
  std::vector<Rat> coefficients() const;

  /// Largest sum of exponents; requires non-negative exponents.
  int total_degree() const;

  /// Value at a point; coordinates hit by negative exponents must be nonzero.
  Rat evaluate(const RatVector& x) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rat& c) const;
  bool operator==(const LaurentPoly& o) const = default;

 private:
  int n_;
  Terms terms_;
};

/// Grammar (whitespace ignored between tokens):
///   poly    := [sign] term (sign term)*
///   term    := rational ['*' monomial] | rational monomial | monomial
///   monomial:= factor (['*'] factor)*
///   factor  := 'x' index ['^' [sign] digits]
///   rational:= digits ['/' digits]
/// Throws ParseError carrying the byte offset of the first bad character.
LaurentPoly parse_laurent(std::string_view text, int n);

/// Canonical text form, parseable by parse_laurent.
std::string to_string(const LaurentPoly& f);

/// Convex hull of the support; throws DomainError for the zero polynomial.
Polytope newton_polytope(const LaurentPoly& f);

}  // namespace arbkk
