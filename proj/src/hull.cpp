#include "arbkk/hull.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>
#include <random>

#include "arbkk/chart.hpp"
#include "arbkk/errors.hpp"

namespace arbkk::hull {
namespace {

constexpr double kFilterLimit = 1e150;

constexpr double kSmallLimit = 4.6e18;  // below 2^62
constexpr double kHadamardLimit = 1e18;

using i128 = __int128;

struct HPoint {
  std::vector<Int> h;  // d coordinates followed by the weight W > 0
  std::vector<double> f;
  bool finite = true;
  std::vector<std::int64_t> s;  // copy of h when every entry is small
  bool small = false;
};

Int to_int(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Int hi(static_cast<unsigned long>(u >> 64));
  Int r = (hi << 64) + Int(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  return neg ? Int(-r) : r;
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Fraction-free determinant; every intermediate is a minor of m.
i128 det128(std::vector<std::vector<i128>>& m) {
  const std::size_t n = m.size();
  i128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void set_doubles(const std::vector<Int>& h, std::vector<double>& f, bool& finite) {
  f.resize(h.size());
  finite = true;
  for (std::size_t i = 0; i < h.size(); ++i) {
    f[i] = h[i].get_d();
    if (!(std::fabs(f[i]) < kFilterLimit)) finite = false;
  }
}

HPoint homogenize(const RatVector& x) {
  Int w = 1;
  for (const auto& c : x) mpz_lcm(w.get_mpz_t(), w.get_mpz_t(), c.get_den_mpz_t());
  HPoint p;
  p.h.resize(x.size() + 1);
  for (std::size_t i = 0; i < x.size(); ++i) p.h[i] = x[i].get_num() * (w / x[i].get_den());
  p.h[x.size()] = w;
  set_doubles(p.h, p.f, p.finite);
  p.small = true;
  for (double v : p.f)
    if (!(std::fabs(v) < kSmallLimit)) p.small = false;
  if (p.small)
    for (const auto& c : p.h) p.s.push_back(c.get_si());
  return p;
}

struct Facet {
  std::vector<int> v;
  std::vector<int> nb;
  std::vector<Int> plane;
  Int scale;  // common factor removed from the raw cofactor vector
  std::vector<double> fplane;
  bool finite = true;
  bool alive = true;
  std::vector<int> conflicts;
};

class Builder {
 public:
  Builder(const std::vector<RatVector>& points, bool triangulate)
      : d_(static_cast<int>(points[0].size())), triangulate_(triangulate) {
    pts_.reserve(points.size());
    for (const auto& p : points) pts_.push_back(homogenize(p));
    AffineChart chart(points);
    if (chart.dim() != d_) throw DomainError("hull input is not full-dimensional");
    initial_ = chart.basis_indices();
    RatVector centroid = zeros(d_);
    for (int i : initial_) centroid = add(centroid, points[i]);
    interior_ = homogenize(scale(centroid, Rat(1, d_ + 1)));
  }

  Result run() {
    const int npts = static_cast<int>(pts_.size());
    pconf_.assign(npts, {});
    done_.assign(npts, false);
    stamp_.assign(npts, -1);
    for (int i : initial_) done_[i] = true;

    // Initial simplex: facet k omits initial_[k].
    for (int k = 0; k <= d_; ++k) {
      Facet f;
      for (int j = 0; j <= d_; ++j)
        if (j != k) {
          f.v.push_back(initial_[j]);
          f.nb.push_back(j);
        }
      make_plane(f);
      facets_.push_back(std::move(f));
    }
    if (triangulate_) result_.simplices.push_back(initial_);
    result_.det_sum += simplex_det(facets_[0], initial_[0]);

    std::vector<int> order;
    for (int i = 0; i < npts; ++i)
      if (!done_[i]) order.push_back(i);
    std::mt19937 rng(0x5eed1234u);
    std::shuffle(order.begin(), order.end(), rng);

    for (int q : order)
      for (int f = 0; f <= d_; ++f)
        if (side(facets_[f], pts_[q]) > 0) {
          facets_[f].conflicts.push_back(q);
          pconf_[q].push_back(f);
        }

    for (int q : order) insert(q);
    finish();
    return std::move(result_);
  }

 private:
  int side(const Facet& f, const HPoint& p) const {
    if (f.finite && p.finite) {
      double s = 0, mag = 0;
      for (int i = 0; i <= d_; ++i) {
        double t = f.fplane[i] * p.f[i];
        s += t;
        mag += std::fabs(t);
      }
      double eps = mag * (4.0 * d_ + 16.0) * DBL_EPSILON;
      if (s > eps) return 1;
      if (s < -eps) return -1;
    }
    Int s = 0;
    for (int i = 0; i <= d_; ++i) s += f.plane[i] * p.h[i];
    return sgn(s);
  }

  void make_plane(Facet& f) {
    if (!small_plane(f)) {
      f.plane.assign(d_ + 1, 0);
      std::vector<std::vector<Int>> minor(d_, std::vector<Int>(d_));
      for (int skip = 0; skip <= d_; ++skip) {
        for (int r = 0; r < d_; ++r) {
          int c2 = 0;
          for (int c = 0; c <= d_; ++c)
            if (c != skip) minor[r][c2++] = pts_[f.v[r]].h[c];
        }
        Int det = determinant(minor);
        f.plane[skip] = (skip % 2 == 0) ? det : Int(-det);
      }
      Int s = 0;
      for (int i = 0; i <= d_; ++i) s += f.plane[i] * interior_.h[i];
      if (s == 0) throw InternalError("degenerate hull facet");
      if (s > 0)
        for (auto& c : f.plane) c = -c;
      Int g = 0;
      for (const auto& c : f.plane) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g > 1)
        for (auto& c : f.plane) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      f.scale = g;
    }
    set_doubles(f.plane, f.fplane, f.finite);
  }

  bool small_plane(Facet& f) {
    double bound = 1;
    for (int r = 0; r < d_; ++r) {
      const HPoint& p = pts_[f.v[r]];
      if (!p.small) return false;
      double norm = 0;
      for (double c : p.f) norm += c * c;
      bound *= std::sqrt(norm) * (1 + 1e-12);
    }
    if (!(bound < kHadamardLimit)) return false;
    std::vector<i128> a(d_ + 1);
    std::vector<std::vector<i128>> minor(d_, std::vector<i128>(d_));
    for (int skip = 0; skip <= d_; ++skip) {
      for (int r = 0; r < d_; ++r) {
        int c2 = 0;
        for (int c = 0; c <= d_; ++c)
          if (c != skip) minor[r][c2++] = pts_[f.v[r]].s[c];
      }
      i128 det = det128(minor);
      a[skip] = (skip % 2 == 0) ? det : -det;
    }
    // interior_ may be large; orient exactly.
    Int s = 0;
    for (int i = 0; i <= d_; ++i) s += to_int(a[i]) * interior_.h[i];
    if (s == 0) throw InternalError("degenerate hull facet");
    i128 g = 0;
    for (i128 c : a) g = gcd128(g, c);
    if (s > 0) g = -g;
    f.plane.resize(d_ + 1);
    for (int i = 0; i <= d_; ++i) f.plane[i] = to_int(a[i] / g);
    f.scale = to_int(g < 0 ? -g : g);
    return true;
  }

  // |det| of the simplex conv(F, q) in homogeneous coordinates, divided by
  // the weights: d! times its volume.
  Rat simplex_det(const Facet& f, int q) const {
    Int s = 0;
    for (int i = 0; i <= d_; ++i) s += f.plane[i] * pts_[q].h[i];
    Int w = pts_[q].h[d_];
    for (int v : f.v) w *= pts_[v].h[d_];
    return make_rat(abs(s) * f.scale, w);
  }

  void insert(int q) {
    done_[q] = true;
    std::vector<int> visible;
    for (int f : pconf_[q])
      if (facets_[f].alive) visible.push_back(f);
    pconf_[q].clear();
    pconf_[q].shrink_to_fit();
    if (visible.empty()) return;

    if (visible_mark_.size() < facets_.size()) visible_mark_.resize(2 * facets_.size(), -1);
    for (int f : visible) {
      visible_mark_[f] = q;
      result_.det_sum += simplex_det(facets_[f], q);
    }
    if (triangulate_)
      for (int f : visible) {
        auto s = facets_[f].v;
        s.push_back(q);
        result_.simplices.push_back(std::move(s));
      }

    std::map<std::vector<int>, std::pair<int, int>> ridges;
    std::vector<int> created;
    for (int f : visible) {
      for (int m = 0; m < d_; ++m) {
        int g = facets_[f].nb[m];
        if (visible_mark_[g] == q) continue;

        Facet nf;
        nf.v = facets_[f].v;
        nf.v[m] = q;
        nf.nb.assign(d_, -1);
        nf.nb[m] = g;
        make_plane(nf);
        const int id = static_cast<int>(facets_.size());
        auto& gnb = facets_[g].nb;
        *std::find(gnb.begin(), gnb.end(), f) = id;

        // Conflicts of the new facet come from the two facets at the ridge.
        for (int src : {f, g})
          for (int r : facets_[src].conflicts) {
            if (done_[r] || stamp_[r] == id) continue;
            stamp_[r] = id;
            if (side(nf, pts_[r]) > 0) {
              nf.conflicts.push_back(r);
              pconf_[r].push_back(id);
            }
          }
        facets_.push_back(std::move(nf));
        created.push_back(id);

        for (int j = 0; j < d_; ++j) {
          if (j == m) continue;
          std::vector<int> key;
          key.reserve(d_ - 1);
          for (int t = 0; t < d_; ++t)
            if (t != j) key.push_back(facets_[id].v[t]);
          std::sort(key.begin(), key.end());
          auto [pos, inserted] = ridges.emplace(std::move(key), std::make_pair(id, j));
          if (!inserted) {
            auto [other, oj] = pos->second;
            facets_[id].nb[j] = other;
            facets_[other].nb[oj] = id;
          }
        }
      }
    }
    for (int f : visible) {
      facets_[f].alive = false;
      facets_[f].conflicts.clear();
      facets_[f].conflicts.shrink_to_fit();
    }
  }

  void finish() {
    result_.dim = d_;
    std::map<Plane, int> plane_ids;
    std::vector<std::vector<int>> incident(pts_.size());
    for (const auto& f : facets_) {
      if (!f.alive) continue;
      Plane p{std::vector<Int>(f.plane.begin(), f.plane.begin() + d_), f.plane[d_]};
      auto [it, inserted] = plane_ids.emplace(p, static_cast<int>(plane_ids.size()));
      result_.facets.push_back(f.v);
      result_.facet_planes.push_back(p);
      for (int v : f.v) incident[v].push_back(it->second);
    }
    std::vector<const Plane*> by_id(plane_ids.size());
    for (const auto& [p, id] : plane_ids) by_id[id] = &p;
    for (const auto& [p, id] : plane_ids) result_.planes.push_back(p);

    for (std::size_t v = 0; v < pts_.size(); ++v) {
      auto& inc = incident[v];
      if (inc.empty()) continue;
      std::sort(inc.begin(), inc.end());
      inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
      if (static_cast<int>(inc.size()) < d_) continue;
      std::vector<std::vector<Int>> rows;
      for (int id : inc) rows.push_back(by_id[id]->normal);
      if (rank(std::move(rows)) == d_) result_.vertices.push_back(static_cast<int>(v));
    }
  }

  int d_;
  bool triangulate_;
  std::vector<HPoint> pts_;
  std::vector<int> initial_;
  HPoint interior_;
  std::vector<Facet> facets_;
  std::vector<std::vector<int>> pconf_;
  std::vector<bool> done_;
  std::vector<int> stamp_;
  std::vector<int> visible_mark_;
  Result result_;
};

}  // namespace

Result compute(const std::vector<RatVector>& points, bool with_triangulation) {
  if (points.empty()) throw DomainError("hull of an empty point set");
  if (points[0].empty()) throw DimensionError("hull in dimension 0");
  for (const auto& p : points)
    if (p.size() != points[0].size()) throw DimensionError("points of different dimensions");
  Builder b(points, with_triangulation);
  return b.run();
}

int side(const Plane& plane, const RatVector& x) {
  Rat s = plane.offset;
  for (std::size_t i = 0; i < x.size(); ++i) s += plane.normal[i] * x[i];
  return sgn(s);
}

}  // namespace arbkk::hull
