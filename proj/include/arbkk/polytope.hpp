#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "arbkk/chart.hpp"
#include "arbkk/rational.hpp"

namespace arbkk {

/// Convex polytope in vertex form.  Vertices are irredundant and sorted
/// lexicographically, so two polytopes are equal iff their vertex lists are.
class Polytope {
 public:
  /// The empty polytope in R^ambient.
  explicit Polytope(int ambient = 0);

  int ambient_dim() const { return d_->ambient; }
  /// -1 for the empty polytope.
  int affine_dim() const { return d_->affine_dim; }
  bool is_empty() const { return d_->affine_dim < 0; }
  bool is_full_dim() const { return d_->affine_dim == d_->ambient; }
  const std::vector<RatVector>& vertices() const { return d_->vertices; }

  /// Chart on the affine hull; inequalities a.y <= b in chart coordinates,
  /// one per facet of the polytope inside its affine hull.
  const AffineChart& chart() const { return d_->chart; }
  const std::vector<std::pair<RatVector, Rat>>& chart_inequalities() const {
    return d_->inequalities;
  }

  bool contains(const RatVector& x) const;

  bool operator==(const Polytope& o) const {
    return ambient_dim() == o.ambient_dim() && vertices() == o.vertices();
  }
  bool operator<(const Polytope& o) const {
    return ambient_dim() != o.ambient_dim() ? ambient_dim() < o.ambient_dim()
                                            : vertices() < o.vertices();
  }

 private:
  struct Data {
    int ambient = 0;
    int affine_dim = -1;
    std::vector<RatVector> vertices;
    AffineChart chart;
    std::vector<std::pair<RatVector, Rat>> inequalities;
    Rat volume = 0;
  };
  std::shared_ptr<const Data> d_;

  friend Polytope convex_hull(const std::vector<RatVector>& points);
  friend Polytope dilate(const Polytope& p, const Rat& factor);
  friend Rat volume(const Polytope& p);
};

Polytope convex_hull(const std::vector<RatVector>& points);
Polytope convex_hull(const std::vector<LatticeVector>& points);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope dilate(const Polytope& p, const Rat& factor);
Polytope translate(const Polytope& p, const RatVector& shift);

/// Standard simplex conv(0, e_1, ..., e_n).
Polytope standard_simplex(int n);

/// Lebesgue volume; 0 unless full-dimensional.
Rat volume(const Polytope& p);

/// |det(v_1 - v_0, ..., v_n - v_0)| / n!
Rat simplex_volume(const std::vector<RatVector>& simplex);

/// min over the polytope of <x,u>.
Rat support_value(const Polytope& p, const RatVector& u);
Rat support_value(const Polytope& p, const LatticeVector& u);

/// Face on which <x,u> attains its minimum.
Polytope face_in_direction(const Polytope& p, const RatVector& u);

/// max<x,u> - min<x,u> over the polytope.
Rat shadow_length(const Polytope& p, const RatVector& u);
Rat shadow_length(const Polytope& p, const LatticeVector& u);

/// Triangulation using only vertices of p; requires full dimension.
std::vector<std::vector<RatVector>> triangulate(const Polytope& p);

bool is_lattice(const Polytope& p);

/// Largest ambient dimension accepted by the mixed volume and mixed integral
/// routines.  Defaults to 4; can be raised up to kHardDimensionCap.
constexpr int kHardDimensionCap = 6;
int dimension_cap();
/// Throws DomainError outside [1, kHardDimensionCap].
void set_dimension_cap(int cap);
/// Throws DimensionError when n exceeds the current cap.
void check_dimension_cap(int n);

}  // namespace arbkk
