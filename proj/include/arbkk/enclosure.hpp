#pragma once

#include <vector>

#include "arbkk/concave.hpp"
#include "arbkk/interval.hpp"
#include "arbkk/laurent.hpp"
#include "arbkk/logreal.hpp"

namespace arbkk {

/// Archimedean roof of sum_j a_j chi^{m_j}:
///   theta(x) = max { sum_j l_j log(|a_j| / l_j) : l in the simplex, sum_j l_j m_j = x }
/// on the hull of the exponents.  Its Legendre dual is
///   psi(u) = -log sum_j |a_j| exp(-<m_j,u>).
struct EntropyRoof {
  std::vector<LatticeVector> exponents;
  std::vector<Rat> abs_coeffs;  // all > 0
  Polytope domain;

  static EntropyRoof from_poly(const LaurentPoly& f);
  static EntropyRoof from_data(const std::vector<LatticeVector>& exponents, const std::vector<Rat>& coeffs);

  std::vector<LogReal> logcoeffs() const;
  int ambient_dim() const { return domain.ambient_dim(); }
};

/// The point (x(u), theta(x(u))) of the graph of theta, with softmax weights
/// l_j proportional to |a_j| exp(-<m_j,u>).
struct EntropySample {
  std::vector<Interval> x;
  Interval value;
};

EntropySample entropy_sample(const EntropyRoof& roof, const std::vector<Interval>& u);

/// Dual sample points u_0..u_budget (ambient coordinates, dyadic rationals).
/// The sequence for a larger budget extends the one for a smaller budget.
std::vector<RatVector> dual_samples(const EntropyRoof& roof, int budget);

/// Rational piecewise-affine functions with lower <= theta <= upper.
struct RoofEnclosure {
  PAConcave lower;
  PAConcave upper;
};

RoofEnclosure roof_enclosure(const EntropyRoof& roof, int budget);

/// [MI(lowers), MI(uppers)] for the given exact functions (real unit) and
/// entropy roofs; together n+1 functions in dimension n.
RatInterval mi_enclosure(const std::vector<PAConcave>& exact, const std::vector<EntropyRoof>& roofs,
                         int budget);

}  // namespace arbkk
