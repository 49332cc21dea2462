#pragma once

#include <vector>

#include "arbkk/rational.hpp"

namespace arbkk {

/// Coordinates on the affine hull of a finite point set.
///
/// The chart selects `dim()` ambient coordinates that restrict to an
/// isomorphism on the affine hull; `lift` inverts the projection.  Convexity,
/// faces and ratios of volumes are preserved, so lower-dimensional sets can be
/// handled by full-dimensional algorithms in chart coordinates.
class AffineChart {
 public:
  AffineChart() = default;
  explicit AffineChart(const std::vector<RatVector>& points);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  bool is_identity() const { return dim() == ambient_; }
  const std::vector<int>& coords() const { return coords_; }

  /// Chart of the image under x -> factor * x (factor != 0).
  AffineChart scaled(const Rat& factor) const;

  RatVector project(const RatVector& x) const;
  RatVector lift(const RatVector& y) const;
  bool contains(const RatVector& x) const;

  /// Restriction of the linear form x -> <u,x> + c to chart coordinates.
  std::pair<RatVector, Rat> pull_back(const RatVector& u, const Rat& c) const;

  /// Embeds a chart-space linear form as an ambient one (zero off the chart).
  RatVector push_forward(const RatVector& slope) const;

  /// Linear equations a.x = b cutting out the affine hull.
  std::vector<std::pair<RatVector, Rat>> equations() const;

  /// Indices of an affinely independent subset spanning the affine hull.
  const std::vector<int>& basis_indices() const { return basis_; }

 private:
  int ambient_ = 0;
  std::vector<int> coords_;
  std::vector<int> basis_;
  // lift(y) = a_ * y + b_, a_ is ambient x dim
  std::vector<RatVector> a_;
  RatVector b_;
};

}  // namespace arbkk
