#include "arbkk/polytope.hpp"

#include <algorithm>
#include <atomic>

#include "arbkk/errors.hpp"
#include "arbkk/hull.hpp"

namespace arbkk {

Polytope::Polytope(int ambient) {
  auto d = std::make_shared<Data>();
  d->ambient = ambient;
  d_ = std::move(d);
}

bool Polytope::contains(const RatVector& x) const {
  if (static_cast<int>(x.size()) != ambient_dim()) throw DimensionError("point dimension mismatch");
  if (is_empty()) return false;
  if (affine_dim() == 0) return x == vertices()[0];
  if (!chart().contains(x)) return false;
  RatVector y = chart().project(x);
  for (const auto& [a, b] : chart_inequalities())
    if (dot(a, y) > b) return false;
  return true;
}

Polytope convex_hull(const std::vector<RatVector>& input) {
  if (input.empty()) throw DomainError("convex hull of no points");
  const int n = static_cast<int>(input[0].size());
  if (n < 1) throw DimensionError("ambient dimension must be at least 1");
  for (const auto& p : input)
    if (static_cast<int>(p.size()) != n) throw DimensionError("points of different dimensions");

  std::vector<RatVector> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto data = std::make_shared<Polytope::Data>();
  data->ambient = n;
  data->chart = AffineChart(pts);
  const int k = data->chart.dim();
  data->affine_dim = k;

  if (k == 0) {
    data->vertices = {pts[0]};
  } else {
    std::vector<RatVector> proj;
    proj.reserve(pts.size());
    for (const auto& p : pts) proj.push_back(data->chart.project(p));
    if (k == 1) {
      auto [lo, hi] = std::minmax_element(proj.begin(), proj.end());
      data->vertices = {pts[lo - proj.begin()], pts[hi - proj.begin()]};
      data->inequalities.emplace_back(RatVector{Rat(-1)}, -(*lo)[0]);
      data->inequalities.emplace_back(RatVector{Rat(1)}, (*hi)[0]);
      if (n == 1) data->volume = (*hi)[0] - (*lo)[0];
    } else {
      hull::Result h = hull::compute(proj);
      if (k == n) data->volume = h.det_sum / Rat(factorial(n));
      for (int v : h.vertices) data->vertices.push_back(pts[v]);
      for (const auto& pl : h.planes) {
        RatVector a(k);
        for (int i = 0; i < k; ++i) a[i] = pl.normal[i];
        data->inequalities.emplace_back(std::move(a), Rat(-pl.offset));
      }
    }
    std::sort(data->vertices.begin(), data->vertices.end());
  }
  Polytope result(n);
  result.d_ = std::move(data);
  return result;
}

Polytope convex_hull(const std::vector<LatticeVector>& points) {
  std::vector<RatVector> r;
  r.reserve(points.size());
  for (const auto& p : points) r.push_back(to_rat(p));
  return convex_hull(r);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionError("Minkowski sum dimension mismatch");
  if (p.is_empty() || q.is_empty()) return Polytope(p.ambient_dim());
  std::vector<RatVector> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(add(a, b));
  return convex_hull(pts);
}

Polytope dilate(const Polytope& p, const Rat& factor) {
  if (p.is_empty()) return p;
  if (factor <= 0) {
    std::vector<RatVector> pts;
    for (const auto& v : p.vertices()) pts.push_back(scale(v, factor));
    return convex_hull(pts);
  }
  auto data = std::make_shared<Polytope::Data>(*p.d_);
  for (auto& v : data->vertices) v = scale(v, factor);
  data->chart = p.chart().scaled(factor);
  for (auto& [a, b] : data->inequalities) b *= factor;
  Rat f = 1;
  for (int i = 0; i < p.ambient_dim(); ++i) f *= factor;
  data->volume *= f;
  Polytope result(p.ambient_dim());
  result.d_ = std::move(data);
  return result;
}

Polytope translate(const Polytope& p, const RatVector& shift) {
  if (p.is_empty()) return p;
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(add(v, shift));
  return convex_hull(pts);
}

Polytope standard_simplex(int n) {
  std::vector<RatVector> pts{zeros(n)};
  for (int i = 0; i < n; ++i) {
    RatVector e = zeros(n);
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return convex_hull(pts);
}

namespace {

// Common-denominator integer copy of a point list.
std::pair<std::vector<std::vector<Int>>, Int> integerize(const std::vector<RatVector>& pts) {
  Int l = 1;
  for (const auto& p : pts)
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::vector<Int>> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out[i].resize(pts[i].size());
    for (std::size_t j = 0; j < pts[i].size(); ++j)
      out[i][j] = pts[i][j].get_num() * (l / pts[i][j].get_den());
  }
  return {std::move(out), l};
}

Int abs_det_of_simplex(const std::vector<std::vector<Int>>& pts, const std::vector<int>& s) {
  const std::size_t n = pts[0].size();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = pts[s[r + 1]][c] - pts[s[0]][c];
  return abs(determinant(std::move(m)));
}

}  // namespace

Rat simplex_volume(const std::vector<RatVector>& simplex) {
  const int n = static_cast<int>(simplex[0].size());
  if (static_cast<int>(simplex.size()) != n + 1) throw DimensionError("simplex needs n+1 vertices");
  auto [pts, l] = integerize(simplex);
  std::vector<int> idx(n + 1);
  for (int i = 0; i <= n; ++i) idx[i] = i;
  Int den = factorial(n);
  for (int i = 0; i < n; ++i) den *= l;
  return make_rat(abs_det_of_simplex(pts, idx), den);
}

Rat volume(const Polytope& p) { return p.d_->volume; }

Rat support_value(const Polytope& p, const RatVector& u) {
  if (p.is_empty()) throw DomainError("support function of the empty polytope");
  if (static_cast<int>(u.size()) != p.ambient_dim()) throw DimensionError("functional dimension mismatch");
  Rat best = dot(p.vertices()[0], u);
  for (const auto& v : p.vertices()) best = std::min(best, dot(v, u));
  return best;
}

Rat support_value(const Polytope& p, const LatticeVector& u) { return support_value(p, to_rat(u)); }

Polytope face_in_direction(const Polytope& p, const RatVector& u) {
  Rat m = support_value(p, u);
  std::vector<RatVector> face;
  for (const auto& v : p.vertices())
    if (dot(v, u) == m) face.push_back(v);
  return convex_hull(face);
}

Rat shadow_length(const Polytope& p, const RatVector& u) {
  return -support_value(p, scale(u, -1)) - support_value(p, u);
}

Rat shadow_length(const Polytope& p, const LatticeVector& u) { return shadow_length(p, to_rat(u)); }

std::vector<std::vector<RatVector>> triangulate(const Polytope& p) {
  if (p.is_empty() || !p.is_full_dim()) throw DomainError("triangulation needs a full-dimensional polytope");
  std::vector<std::vector<RatVector>> out;
  if (p.ambient_dim() == 1) {
    out.push_back(p.vertices());
    return out;
  }
  hull::Result h = hull::compute(p.vertices(), true);
  for (const auto& s : h.simplices) {
    std::vector<RatVector> simplex;
    for (int i : s) simplex.push_back(p.vertices()[i]);
    out.push_back(std::move(simplex));
  }
  return out;
}

bool is_lattice(const Polytope& p) {
  for (const auto& v : p.vertices())
    if (!is_integral(v)) return false;
  return true;
}

namespace {
std::atomic<int> g_dimension_cap{4};
}

int dimension_cap() { return g_dimension_cap.load(); }

void set_dimension_cap(int cap) {
  if (cap < 1 || cap > kHardDimensionCap)
    throw DomainError("dimension cap must lie in [1, " + std::to_string(kHardDimensionCap) + "]");
  g_dimension_cap.store(cap);
}

void check_dimension_cap(int n) {
  if (n > dimension_cap())
    throw DimensionError("ambient dimension " + std::to_string(n) + " exceeds the cap " +
                         std::to_string(dimension_cap()));
}

}  // namespace arbkk
