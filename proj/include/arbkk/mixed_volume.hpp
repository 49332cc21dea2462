#pragma once

#include <vector>

#include "arbkk/laurent.hpp"
#include "arbkk/polytope.hpp"

namespace arbkk {

/// Mixed volume of n polytopes in R^n, normalized so MV(P,...,P) = n! vol(P),
/// by inclusion-exclusion over Minkowski sums.
Rat mixed_volume(const std::vector<Polytope>& polytopes);

/// Same value via the facet recursion
///   MV(P_1,...,P_n) = -sum_u Psi_{P_1}(u) MV(P_2^u,...,P_n^u)
/// over primitive inner facet normals u of P_2 + ... + P_n.
Rat mixed_volume_facet(const std::vector<Polytope>& polytopes);

/// Same value read off the l_1...l_n coefficient of vol(l_1 P_1 + ... + l_n P_n),
/// interpolated on the grid {0..n}^n.
Rat mixed_volume_interpolation(const std::vector<Polytope>& polytopes);

/// Minkowski sum with a process-wide memo keyed by the operands' vertex lists.
Polytope cached_minkowski_sum(const Polytope& p, const Polytope& q);

/// Mixed volume of the Newton polytopes of a square system.
Int bkk_degree_bound(const std::vector<LaurentPoly>& system);

}  // namespace arbkk
