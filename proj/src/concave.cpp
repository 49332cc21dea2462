#include "arbkk/concave.hpp"

#include <algorithm>
#include <optional>

#include "arbkk/errors.hpp"
#include "arbkk/hull.hpp"

namespace arbkk {

std::string to_string(const Unit& u) { return u.is_real() ? "interval" : "log " + to_string(u.prime()); }

PAConcave PAConcave::from_points(const std::vector<LiftedPoint>& input, Unit unit) {
  if (input.empty()) throw DomainError("piecewise-affine function without points");
  const std::size_t n = input[0].first.size();
  for (const auto& [x, t] : input)
    if (x.size() != n) throw DimensionError("lifted points of different dimensions");

  std::vector<LiftedPoint> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<RatVector> bases;
  bases.reserve(pts.size());
  for (const auto& [x, t] : pts) bases.push_back(x);

  auto data = std::make_shared<Data>();
  data->domain = convex_hull(bases);
  data->unit = std::move(unit);
  const Polytope& dom = data->domain;
  const int k = dom.affine_dim();

  if (k == 0) {
    Rat top = pts[0].second;
    for (const auto& [x, t] : pts) top = std::max(top, t);
    data->lifted = {{dom.vertices()[0], top}};
    data->pieces = {{zeros(n), top}};
    PAConcave g;
    g.d_ = std::move(data);
    return g;
  }

  const AffineChart& chart = dom.chart();
  Rat floor = pts[0].second;
  for (const auto& [x, t] : pts) floor = std::min(floor, t);
  floor -= 1;

  std::vector<RatVector> lifted;
  lifted.reserve(pts.size() + dom.vertices().size());
  for (const auto& [x, t] : pts) {
    RatVector z = chart.project(x);
    z.push_back(t);
    lifted.push_back(std::move(z));
  }
  for (const auto& v : dom.vertices()) {
    RatVector z = chart.project(v);
    z.push_back(floor);
    lifted.push_back(std::move(z));
  }

  hull::Result h = hull::compute(lifted);
  const int m = static_cast<int>(pts.size());
  for (int v : h.vertices)
    if (v < m) data->lifted.push_back(pts[v]);
  std::sort(data->lifted.begin(), data->lifted.end());

  for (const auto& pl : h.planes) {
    if (pl.normal[k] <= 0) continue;
    RatVector slope(k);
    for (int i = 0; i < k; ++i) slope[i] = -Rat(pl.normal[i]) / pl.normal[k];
    data->pieces.push_back({chart.push_forward(slope), -Rat(pl.offset) / pl.normal[k]});
  }

  if (k == static_cast<int>(n)) {
    for (std::size_t f = 0; f < h.facets.size(); ++f) {
      if (h.facet_planes[f].normal[k] <= 0) continue;
      std::vector<LiftedPoint> cell;
      for (int v : h.facets[f]) {
        RatVector y(lifted[v].begin(), lifted[v].end() - 1);
        cell.emplace_back(std::move(y), lifted[v].back());
      }
      data->cells.push_back(std::move(cell));
    }
  }
  PAConcave g;
  g.d_ = std::move(data);
  return g;
}

PAConcave PAConcave::from_points(const std::vector<LiftedPoint>& points, const Polytope& domain,
                                 Unit unit) {
  PAConcave g = from_points(points, std::move(unit));
  if (!(g.domain() == domain))
    throw DomainError("lifted base points do not span the given domain");
  return g;
}

PAConcave PAConcave::zero(const Polytope& domain, Unit unit) {
  if (domain.is_empty()) throw DomainError("zero function on the empty polytope");
  std::vector<LiftedPoint> pts;
  for (const auto& v : domain.vertices()) pts.emplace_back(v, Rat(0));
  return from_points(pts, std::move(unit));
}

Rat PAConcave::eval(const RatVector& x) const {
  if (!domain().contains(x)) throw DomainError("point outside the domain");
  Rat best = dot(pieces()[0].slope, x) + pieces()[0].intercept;
  for (const auto& p : pieces()) best = std::min<Rat>(best, dot(p.slope, x) + p.intercept);
  return best;
}

Rat PAConcave::max_value() const {
  Rat best = lifted()[0].second;
  for (const auto& [x, t] : lifted()) best = std::max<Rat>(best, t);
  return best;
}

Rat PAConcave::min_value() const {
  Rat best = eval(domain().vertices()[0]);
  for (const auto& v : domain().vertices()) best = std::min<Rat>(best, eval(v));
  return best;
}

Rat PAConcave::integral() const {
  if (!domain().is_full_dim()) return 0;
  Rat total = 0;
  const int n = ambient_dim();
  for (const auto& cell : d_->cells) {
    std::vector<RatVector> simplex;
    Rat sum = 0;
    for (const auto& [y, t] : cell) {
      simplex.push_back(y);
      sum += t;
    }
    total += simplex_volume(simplex) * sum;
  }
  return total / (n + 1);
}

Rat PAConcave::legendre_dual_eval(const RatVector& u) const {
  if (static_cast<int>(u.size()) != ambient_dim()) throw DimensionError("functional dimension mismatch");
  Rat best = dot(lifted()[0].first, u) - lifted()[0].second;
  for (const auto& [x, t] : lifted()) best = std::min<Rat>(best, dot(x, u) - t);
  return best;
}

PAConcave sup_convolution(const PAConcave& g0, const PAConcave& g1) {
  if (g0.ambient_dim() != g1.ambient_dim()) throw DimensionError("sup-convolution dimension mismatch");
  if (!(g0.unit() == g1.unit())) throw DomainError("sup-convolution of functions with different units");
  std::vector<LiftedPoint> pts;
  pts.reserve(g0.lifted().size() * g1.lifted().size());
  for (const auto& [x0, t0] : g0.lifted())
    for (const auto& [x1, t1] : g1.lifted()) pts.emplace_back(add(x0, x1), t0 + t1);
  return PAConcave::from_points(pts, g0.unit());
}

Rat mixed_integral(const std::vector<PAConcave>& g) {
  if (g.empty()) throw DimensionError("mixed integral of no functions");
  const int n = g[0].ambient_dim();
  if (static_cast<int>(g.size()) != n + 1)
    throw DimensionError("mixed integral needs n+1 functions in dimension n");
  check_dimension_cap(n);
  for (const auto& f : g) {
    if (f.ambient_dim() != n) throw DimensionError("mixed integral dimension mismatch");
    if (!(f.unit() == g[0].unit())) throw DomainError("mixed integral of functions with different units");
  }
  const unsigned full = (1u << (n + 1)) - 1;
  std::vector<std::optional<PAConcave>> conv(full + 1);
  Rat total = 0;
  for (unsigned mask = 1; mask <= full; ++mask) {
    const int low = __builtin_ctz(mask);
    const unsigned rest = mask & (mask - 1);
    conv[mask] = rest == 0 ? g[low] : sup_convolution(*conv[rest], g[low]);
    Rat v = conv[mask]->integral();
    if ((n + 1 - __builtin_popcount(mask)) % 2 == 0)
      total += v;
    else
      total -= v;
  }
  return total;
}

Rat eval(const HFormPA& h, const RatVector& x) {
  if (h.tangents.empty()) throw DomainError("H-form function without tangents");
  if (!h.domain.contains(x)) throw DomainError("point outside the domain");
  Rat best = dot(h.tangents[0].u, x) + h.tangents[0].c;
  for (const auto& t : h.tangents) best = std::min<Rat>(best, dot(t.u, x) + t.c);
  return best;
}

PAConcave hform_to_vform(const HFormPA& h) {
  if (h.tangents.empty()) throw DomainError("H-form function without tangents");
  const Polytope& dom = h.domain;
  if (dom.is_empty()) throw DomainError("H-form function on the empty polytope");
  const int k = dom.affine_dim();
  if (k == 0) return PAConcave::from_points({{dom.vertices()[0], eval(h, dom.vertices()[0])}}, h.unit);

  const AffineChart& chart = dom.chart();
  std::vector<std::pair<RatVector, Rat>> forms;  // t <= sigma.y + kappa
  for (const auto& t : h.tangents) forms.push_back(chart.pull_back(t.u, t.c));
  auto env = [&](const RatVector& y) {
    Rat best = dot(forms[0].first, y) + forms[0].second;
    for (const auto& [s, c] : forms) best = std::min<Rat>(best, dot(s, y) + c);
    return best;
  };

  RatVector y0 = zeros(k);
  Rat floor;
  bool first = true;
  for (const auto& v : dom.vertices()) {
    RatVector y = chart.project(v);
    y0 = add(y0, y);
    Rat e = env(y);
    if (first || e < floor) floor = e;
    first = false;
  }
  floor -= 1;
  y0 = scale(y0, Rat(1, static_cast<long>(dom.vertices().size())));
  const Rat t0 = (floor + env(y0)) / 2;
  RatVector z0 = y0;
  z0.push_back(t0);

  // Polar dual of the hypograph (cut at `floor`) around z0.
  std::vector<RatVector> dual;
  auto add_halfspace = [&](const RatVector& hv, const Rat& beta) {
    Rat slack = beta - dot(hv, z0);
    if (slack <= 0) throw InternalError("interior point on a bounding hyperplane");
    dual.push_back(scale(hv, 1 / slack));
  };
  for (const auto& [a, b] : dom.chart_inequalities()) {
    RatVector hv = a;
    hv.push_back(0);
    add_halfspace(hv, b);
  }
  for (const auto& [s, c] : forms) {
    RatVector hv = scale(s, -1);
    hv.push_back(1);
    add_halfspace(hv, c);
  }
  RatVector down = zeros(k + 1);
  down[k] = -1;
  add_halfspace(down, -floor);

  hull::Result d = hull::compute(dual);
  std::vector<LiftedPoint> pts;
  for (const auto& pl : d.planes) {
    Rat denom = -Rat(pl.offset);
    RatVector z(k + 1);
    for (int i = 0; i <= k; ++i) z[i] = z0[i] + pl.normal[i] / denom;
    if (z[k] == floor) continue;
    RatVector y(z.begin(), z.end() - 1);
    pts.emplace_back(chart.lift(y), z[k]);
  }
  if (pts.empty()) throw InternalError("empty upper face in vertex enumeration");
  return PAConcave::from_points(pts, h.unit);
}

}  // namespace arbkk
