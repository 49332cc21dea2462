#pragma once

#include <vector>

#include "arbkk/rational.hpp"

namespace arbkk::hull {

/// Oriented hyperplane {z : normal.z + offset = 0} in integer coefficients,
/// gcd-normalized; points of the hull satisfy normal.z + offset <= 0.
struct Plane {
  std::vector<Int> normal;
  Int offset;
  bool operator<(const Plane& o) const {
    return normal != o.normal ? normal < o.normal : offset < o.offset;
  }
  bool operator==(const Plane& o) const = default;
};

struct Result {
  int dim = 0;
  /// Boundary simplices (dim vertices each) with their supporting planes.
  std::vector<std::vector<int>> facets;
  std::vector<Plane> facet_planes;
  /// Distinct supporting planes (the true facets), sorted.
  std::vector<Plane> planes;
  /// Indices of the extreme points of the input.
  std::vector<int> vertices;
  /// Placing triangulation (dim + 1 indices per simplex) when requested.
  std::vector<std::vector<int>> simplices;
  /// Sum of |det| over the placing triangulation, i.e. dim! * volume.
  Rat det_sum = 0;
};

/// Exact beneath-beyond convex hull of a full-dimensional point set in R^d,
/// d >= 1.  Throws DomainError if the points do not affinely span R^d.
///
/// Points are inserted in a fixed pseudo-random order and only points
/// strictly beyond a facet are placed, so the boundary is a triangulation
/// whose vertices are input points.
Result compute(const std::vector<RatVector>& points, bool with_triangulation = false);

/// sign(normal.x + offset) for a rational point.
int side(const Plane& plane, const RatVector& x);

}  // namespace arbkk::hull
