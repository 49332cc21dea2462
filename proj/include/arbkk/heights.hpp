#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arbkk/concave.hpp"
#include "arbkk/enclosure.hpp"
#include "arbkk/laurent.hpp"
#include "arbkk/logreal.hpp"
#include "arbkk/places.hpp"

namespace arbkk {

/// Toric metric on the divisor of the polytope Delta_0: either the canonical
/// one, or the pullback of the l1 metric along x -> (a_j chi^{m_j}(x))_j.
class MetricSpec {
 public:
  enum class Kind { Canonical, Monomial };

  /// Throws DomainError unless `polytope` is a non-empty lattice polytope.
  static MetricSpec canonical(const Polytope& polytope);
  /// Throws on empty or mismatched lists and on zero coefficients.
  static MetricSpec monomial(std::vector<LatticeVector> exponents, std::vector<Rat> coefficients);

  Kind kind() const { return kind_; }
  bool is_canonical() const { return kind_ == Kind::Canonical; }
  int ambient_dim() const { return polytope_.ambient_dim(); }
  /// Delta_0 (the hull of the exponents for monomial specs).
  const Polytope& polytope() const { return polytope_; }
  const std::vector<LatticeVector>& exponents() const { return exponents_; }
  const std::vector<Rat>& coefficients() const { return coefficients_; }

 private:
  MetricSpec() = default;
  Kind kind_ = Kind::Canonical;
  Polytope polytope_;
  std::vector<LatticeVector> exponents_;
  std::vector<Rat> coefficients_;
};

/// Points of the torus with positive multiplicities.
class ZeroCycle {
 public:
  ZeroCycle() = default;
  /// Throws DomainError on zero coordinates, repeated points or multiplicity < 1.
  explicit ZeroCycle(std::vector<std::pair<TorusPoint, long>> points);

  const std::vector<std::pair<TorusPoint, long>>& points() const { return points_; }
  long degree() const;

 private:
  std::vector<std::pair<TorusPoint, long>> points_;
};

/// Exact roof (non-Archimedean, values in units of log p) or entropy roof.
using Roof = std::variant<PAConcave, EntropyRoof>;

Roof roof_function(const LaurentPoly& f, const Place& v);
Roof roof_metric(const MetricSpec& spec, const Place& v);

/// Dual samples per entropy roof used when no budget is given: 64 up to
/// dimension 2, fewer above since the sup-convolutions grow like budget^n.
int default_budget(int n);

struct PlaceContribution {
  Place place;
  LogReal exact;                          // non-Archimedean places
  std::optional<RatInterval> enclosure;   // Archimedean place
};

/// sum_v MI(roof_0,v, ..., roof_n,v) = exact + (value in archimedean).
struct Theorem1Bound {
  LogReal exact;
  RatInterval archimedean;
  int budget = 0;
  std::vector<PlaceContribution> per_place;

  RatInterval enclosure() const;
};

Theorem1Bound theorem1_bound(const MetricSpec& spec, const std::vector<LaurentPoly>& f, int budget);

/// (sum_v max roof_0,v) MV(Delta_1..Delta_n) + sum_i l(f_i) MV(Delta_0..^i..Delta_n).
LogReal corollary_bound(const MetricSpec& spec, const std::vector<LaurentPoly>& f);

/// sum_i (prod_{j != i} deg f_j) l(f_i); needs polynomials without negative exponents.
LogReal bezout_bound(const std::vector<LaurentPoly>& f);

LogReal point_height(const MetricSpec& spec, const TorusPoint& p);
LogReal cycle_height(const MetricSpec& spec, const ZeroCycle& z);

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status;
  std::string slack;  // rhs - lhs, exact or as a decimal interval
};

struct BoundReport {
  Int degree_bound;
  Theorem1Bound theorem1;
  LogReal corollary;
  std::optional<LogReal> bezout;
  std::optional<long> cycle_degree;
  std::optional<LogReal> height;
  std::vector<Check> checks;

  CheckStatus status() const;
};

/// Slack allowed between the enclosure of the first bound and the second.
inline const Rat kBoundSlack{1, 1000000000};

/// Bounds for a square system; the budget doubles (at most 4 times) until
/// the comparison of the two bounds is certified.
BoundReport bound_report(const MetricSpec& spec, const std::vector<LaurentPoly>& f, int budget);

/// As bound_report, plus the cycle checks.  Throws ResidualError when a
/// listed point is not a common zero.
BoundReport verify(const std::vector<LaurentPoly>& f, const MetricSpec& spec, const ZeroCycle& z,
                   int budget);

}  // namespace arbkk
