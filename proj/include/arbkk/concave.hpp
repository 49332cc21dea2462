#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "arbkk/polytope.hpp"
#include "arbkk/rational.hpp"

namespace arbkk {

/// Scale attached to the values of a piecewise-affine function: either a
/// rational multiple of log p, or plain reals (nats, used for rigorous
/// Archimedean bounds).
class Unit {
 public:
  static Unit real() { return Unit(Int(0)); }
  static Unit log_prime(const Int& p) { return Unit(p); }

  bool is_real() const { return p_ == 0; }
  const Int& prime() const { return p_; }
  bool operator==(const Unit& o) const { return p_ == o.p_; }

 private:
  explicit Unit(Int p) : p_(std::move(p)) {}
  Int p_;
};

/// "log p" or "interval".
std::string to_string(const Unit& u);

using LiftedPoint = std::pair<RatVector, Rat>;

/// Concave piecewise-affine function: the upper envelope of finitely many
/// lifted points (x_k, t_k) over the convex hull of the x_k.
class PAConcave {
 public:
  struct Piece {
    RatVector slope;
    Rat intercept;
  };

  /// Reduces the lifted set to the generators of the envelope.
  static PAConcave from_points(const std::vector<LiftedPoint>& points, Unit unit = Unit::real());
  /// As above, and checks that the hull of the base points is `domain`.
  static PAConcave from_points(const std::vector<LiftedPoint>& points, const Polytope& domain,
                               Unit unit = Unit::real());
  /// The zero function on a polytope.
  static PAConcave zero(const Polytope& domain, Unit unit = Unit::real());

  int ambient_dim() const { return d_->domain.ambient_dim(); }
  const Polytope& domain() const { return d_->domain; }
  const Unit& unit() const { return d_->unit; }
  /// Reduced generators, sorted by base point.
  const std::vector<LiftedPoint>& lifted() const { return d_->lifted; }
  /// Affine pieces in ambient coordinates; the function is their minimum on
  /// the domain.
  const std::vector<Piece>& pieces() const { return d_->pieces; }

  /// Throws DomainError outside the domain.
  Rat eval(const RatVector& x) const;
  Rat max_value() const;
  Rat min_value() const;
  /// Lebesgue integral; 0 unless the domain is full-dimensional.
  Rat integral() const;
  /// g^v(u) = min_k <x_k,u> - t_k.
  Rat legendre_dual_eval(const RatVector& u) const;

 private:
  PAConcave() = default;

  struct Data {
    Polytope domain;
    Unit unit = Unit::real();
    std::vector<LiftedPoint> lifted;
    std::vector<Piece> pieces;
    // Upper cells of the lifting in chart coordinates (full-dimensional only).
    std::vector<std::vector<LiftedPoint>> cells;
  };
  std::shared_ptr<const Data> d_;
};

/// (g0 [+] g1)(x) = sup{g0(x0) + g1(x1) : x0 + x1 = x}.
PAConcave sup_convolution(const PAConcave& g0, const PAConcave& g1);

/// Alternating sum over nonempty subsets of integrals of sup-convolutions.
/// Needs n+1 functions in ambient dimension n.
Rat mixed_integral(const std::vector<PAConcave>& g);

/// Tangent x -> <x,u> + c.
struct Tangent {
  RatVector u;
  Rat c;
};

/// Minimum of finitely many tangents over a polytope.
struct HFormPA {
  Polytope domain;
  std::vector<Tangent> tangents;
  Unit unit = Unit::real();
};

Rat eval(const HFormPA& h, const RatVector& x);

/// Vertex form of an H-form function (vertex enumeration of its hypograph).
PAConcave hform_to_vform(const HFormPA& h);

}  // namespace arbkk
