#pragma once

#include <utility>
#include <vector>

#include "arbkk/heights.hpp"

namespace arbkk {

/// Projective rational points with multiplicities.
using ProjectiveCycle = std::vector<std::pair<RatVector, long>>;

/// prod_q (q_0 u_0 + ... + q_r u_r)^{mu_q} as a polynomial in r+1 variables
/// (u_j is the variable x_{j+1}).  Throws DomainError on an all-zero tuple.
LaurentPoly resultant_expand(const ProjectiveCycle& cycle);

/// Image of a torus cycle under x -> (a_0 chi^{m_0}(x) : ... : a_r chi^{m_r}(x)).
ProjectiveCycle monomial_pushforward(const ZeroCycle& z, const std::vector<LatticeVector>& m0,
                                     const std::vector<Rat>& a0);

/// sum_{i=0}^n MV(Delta_0, ..^i.., Delta_n) l(a_i), with a_0 the metric data.
LogReal resultant_length_bound(const std::vector<LaurentPoly>& f, const std::vector<LatticeVector>& m0,
                               const std::vector<Rat>& a0);

/// Enclosure of the length sum_v l_v of a nonzero coefficient vector.  The
/// length is invariant under scaling, so it equals log ||c||_1 for the
/// primitive integer multiple c of the vector.
RatInterval length_enclosure(const std::vector<Rat>& coeffs, int bits = 128);

}  // namespace arbkk
