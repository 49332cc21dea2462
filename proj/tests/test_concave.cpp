#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

#include "arbkk/concave.hpp"
#include "arbkk/enclosure.hpp"
#include "arbkk/errors.hpp"
#include "arbkk/heights.hpp"
#include "arbkk/laurent.hpp"

using namespace arbkk;
using oracle::Gen;

namespace {

std::vector<LiftedPoint> random_lifts(Gen& g, int n, int k, long lo, long hi) {
  std::vector<LiftedPoint> pts;
  for (int i = 0; i < k; ++i) pts.emplace_back(oracle::rat(g.lattice(n, lo, hi)), g.rational(-4, 4, 6));
  return pts;
}

PAConcave random_pa(Gen& g, int n, int kmin, int kmax, long lo = 0, long hi = 3) {
  return PAConcave::from_points(random_lifts(g, n, static_cast<int>(g.uniform(kmin, kmax)), lo, hi));
}

// Random point of the domain: convex combination of the generators.
RatVector random_point(Gen& g, const PAConcave& f) {
  const auto& l = f.lifted();
  std::vector<Rat> w;
  Rat total = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    w.emplace_back(g.uniform(0, 5));
    total += w.back();
  }
  if (total == 0) return l[0].first;
  RatVector x = zeros(l[0].first.size());
  for (std::size_t i = 0; i < l.size(); ++i) x = add(x, scale(l[i].first, w[i] / total));
  return x;
}

oracle::Concave1D to_1d(const PAConcave& f) {
  std::vector<std::pair<Rat, Rat>> pts;
  for (const auto& [x, t] : f.lifted()) pts.emplace_back(x[0], t);
  return oracle::envelope_1d(pts);
}

Rat alternating_1d(const PAConcave& g0, const PAConcave& g1) {
  const auto a = to_1d(g0), b = to_1d(g1);
  return oracle::integral_1d(oracle::supconv_1d(a, b)) - oracle::integral_1d(a) - oracle::integral_1d(b);
}

}  // namespace

TEST_CASE("dominated lifts are dropped") {
  auto f = PAConcave::from_points({{{0}, 0}, {{1}, 0}, {{Rat(1, 2)}, -1}});
  CHECK(f.lifted().size() == 2);
  CHECK(f.eval({Rat(1, 2)}) == 0);
  CHECK(f.max_value() == 0);
  CHECK(f.min_value() == 0);

  auto c = PAConcave::from_points({{{3, 4}, 7}});
  CHECK(c.domain().affine_dim() == 0);
  CHECK(c.eval({3, 4}) == 7);
  CHECK_THROWS_AS(c.eval({3, 5}), DomainError);
}

TEST_CASE("evaluation matches the basis-enumeration LP") {
  Gen g(41);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      auto pts = random_lifts(g, n, static_cast<int>(g.uniform(1, 7)), 0, 3);
      auto f = PAConcave::from_points(pts);
      for (int k = 0; k < 5; ++k) {
        const RatVector x = random_point(g, f);
        const auto want = oracle::lp_envelope(pts, x);
        REQUIRE(want);
        CHECK(f.eval(x) == *want);
      }
    }
}

TEST_CASE("pieces reproduce the envelope") {
  Gen g(42);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_pa(g, 2, 3, 8);
    if (!f.domain().is_full_dim()) continue;
    for (int k = 0; k < 5; ++k) {
      const RatVector x = random_point(g, f);
      Rat best = dot(f.pieces()[0].slope, x) + f.pieces()[0].intercept;
      for (const auto& p : f.pieces()) best = std::min<Rat>(best, dot(p.slope, x) + p.intercept);
      CHECK(best == f.eval(x));
    }
  }
}

TEST_CASE("p-adic roof of a two-term polynomial") {
  auto roof = std::get<PAConcave>(roof_function(parse_laurent("x1 - 3", 1), Place::prime(3)));
  CHECK(roof.unit() == Unit::log_prime(3));
  CHECK(roof.eval({0}) == -1);
  CHECK(roof.eval({1}) == 0);
  CHECK(roof.eval({Rat(1, 2)}) == Rat(-1, 2));

  auto flat = std::get<PAConcave>(roof_function(parse_laurent("x1 - 3", 1), Place::prime(2)));
  CHECK(flat.max_value() == 0);
  CHECK(flat.min_value() == 0);
}

TEST_CASE("constants") {
  const auto simplex2 = standard_simplex(2);
  std::vector<LiftedPoint> tri;
  for (const auto& v : simplex2.vertices()) tri.emplace_back(v, Rat(5));
  auto f = PAConcave::from_points(tri);
  CHECK(f.eval({Rat(1, 3), Rat(1, 5)}) == 5);
  CHECK(f.integral() == Rat(5, 2));
  for (int n = 1; n <= 3; ++n) {
    std::vector<LiftedPoint> pts;
    const auto simplex = standard_simplex(n);
    for (const auto& v : simplex.vertices()) pts.emplace_back(v, Rat(7, 3));
    CHECK(PAConcave::from_points(pts).integral() == Rat(7, 3) / Rat(factorial(n)));
  }
}

TEST_CASE("sup-convolution basics") {
  Gen g(43);
  auto f = random_pa(g, 2, 3, 6);
  auto origin = PAConcave::zero(convex_hull(std::vector<LatticeVector>{{0, 0}}));
  auto h = sup_convolution(f, origin);
  CHECK(h.domain() == f.domain());
  CHECK(h.lifted() == f.lifted());

  // x and 2x on [0,1]: the convolution climbs with slope 2, then slope 1
  auto a = PAConcave::from_points({{{0}, 0}, {{1}, 1}});
  auto b = PAConcave::from_points({{{0}, 0}, {{1}, 2}});
  auto s = sup_convolution(a, b);
  CHECK(s.eval({0}) == 0);
  CHECK(s.eval({1}) == 2);
  CHECK(s.eval({2}) == 3);
  CHECK(s.eval({Rat(1, 2)}) == 1);
}

TEST_CASE("sup-convolution in one variable matches slope merging") {
  Gen g(44);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_pa(g, 1, 1, 5, -2, 3), h = random_pa(g, 1, 1, 5, -2, 3);
    auto s = sup_convolution(f, h);
    const auto want = oracle::supconv_1d(to_1d(f), to_1d(h));
    for (const auto& [x, t] : want.knots) CHECK(s.eval({x}) == t);
    for (const auto& [x, t] : s.lifted()) CHECK(oracle::eval_1d(want, x[0]) == t);
  }
}

TEST_CASE("sup-convolution in two variables: grid lower bound and LP value") {
  Gen g(45);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_pa(g, 2, 2, 5), h = random_pa(g, 2, 2, 5);
    auto s = sup_convolution(f, h);
    // Pairwise sums of generators form a lifted set whose LP envelope is the convolution.
    std::vector<LiftedPoint> sums;
    for (const auto& [x0, t0] : f.lifted())
      for (const auto& [x1, t1] : h.lifted()) sums.emplace_back(add(x0, x1), t0 + t1);
    for (int k = 0; k < 4; ++k) {
      const RatVector x = add(random_point(g, f), random_point(g, h));
      const Rat v = s.eval(x);
      CHECK(v == *oracle::lp_envelope(sums, x));
      // every split x = x0 + (x - x0) on a grid stays below
      for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j) {
          RatVector x0{make_rat(i, 2), make_rat(j, 2)};
          RatVector x1 = sub(x, x0);
          if (f.domain().contains(x0) && h.domain().contains(x1)) CHECK(f.eval(x0) + h.eval(x1) <= v);
        }
    }
  }
}

TEST_CASE("integrals") {
  CHECK(PAConcave::from_points({{{0}, 1}, {{1}, 0}}).integral() == Rat(1, 2));
  CHECK(PAConcave::from_points({{{0, 0}, 1}, {{1, 0}, 1}}).integral() == 0);
  Gen g(46);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<LiftedPoint> pts;
    // gradient jumps stay below one so that the midpoint rule is accurate to 1e-6 at this grid
    for (const auto& c : std::vector<RatVector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}) pts.emplace_back(c, g.rational(-1, 1, 8) / 8);
    for (int k = 0; k < 4; ++k) pts.emplace_back(g.rational_vector(2, 0, 1, 8), g.rational(0, 1, 8) / 8);
    auto f = PAConcave::from_points(pts);
    const double q = oracle::quadrature_unit_square(f.pieces(), 512);
    CHECK(std::fabs(f.integral().get_d() - q) < 1e-6);
  }
}

TEST_CASE("integrals in one variable match the trapezoid rule") {
  Gen g(47);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_pa(g, 1, 1, 6, -3, 3);
    CHECK(f.integral() == oracle::integral_1d(to_1d(f)));
  }
}

TEST_CASE("mixed integrals") {
  std::vector<PAConcave> zeros3;
  for (int i = 0; i < 3; ++i) zeros3.push_back(PAConcave::zero(standard_simplex(2)));
  CHECK(mixed_integral(zeros3) == 0);
  CHECK_THROWS_AS(mixed_integral({PAConcave::zero(standard_simplex(2))}), DimensionError);

  Gen g(48);
  for (int trial = 0; trial < 30; ++trial) {
    auto g0 = random_pa(g, 1, 1, 4, -2, 2), g1 = random_pa(g, 1, 1, 4, -2, 2);
    CHECK(mixed_integral({g0, g1}) == alternating_1d(g0, g1));
  }
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_pa(g, 2, 3, 5);
    CHECK(mixed_integral({f, f, f}) == Rat(6) * f.integral());
  }
}

TEST_CASE("mixed integral of constants is a mixed volume times the constant") {
  // MI(c_0 on P_0, ..., c_n on P_n) = sum_i c_i MV(P_0..^i..P_n)
  auto c = [](const Polytope& p, const Rat& v) {
    std::vector<LiftedPoint> pts;
    for (const auto& x : p.vertices()) pts.emplace_back(x, v);
    return PAConcave::from_points(pts);
  };
  auto sq = convex_hull(std::vector<LatticeVector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto t = standard_simplex(2);
  auto s = convex_hull(std::vector<LatticeVector>{{0, 0}, {2, 0}});
  // MV(t,s)=2, MV(sq,s)=2, MV(sq,t)=2
  CHECK(mixed_integral({c(sq, 1), c(t, 2), c(s, 3)}) == Rat(1 * 2 + 2 * 2 + 3 * 2));
}

TEST_CASE("Legendre duals") {
  auto t = standard_simplex(2);
  auto z = PAConcave::zero(t);
  Gen g(49);
  for (int trial = 0; trial < 20; ++trial) {
    auto u = g.rational_vector(2, -3, 3, 4);
    CHECK(z.legendre_dual_eval(u) == support_value(t, u));
  }
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_pa(g, 2, 3, 7);
    if (!f.domain().is_full_dim()) continue;
    for (const auto& p : f.pieces()) CHECK(f.legendre_dual_eval(p.slope) == -p.intercept);
    for (int k = 0; k < 5; ++k) {
      const RatVector x = random_point(g, f);
      Rat best = dot(x, f.pieces()[0].slope) - f.legendre_dual_eval(f.pieces()[0].slope);
      for (const auto& p : f.pieces()) best = std::min<Rat>(best, dot(x, p.slope) - f.legendre_dual_eval(p.slope));
      CHECK(best == f.eval(x));
    }
  }
}

TEST_CASE("H-form to V-form") {
  auto t = standard_simplex(2);
  auto one = hform_to_vform({t, {{{1, 2}, 3}}, Unit::real()});
  CHECK(one.lifted().size() == 3);
  CHECK(one.eval({0, 0}) == 3);
  CHECK(one.eval({1, 0}) == 4);
  CHECK(one.eval({0, 1}) == 5);

  auto seg = convex_hull(std::vector<LatticeVector>{{0}, {1}});
  auto two = hform_to_vform({seg, {{{1}, 0}, {{-1}, 1}}, Unit::real()});
  REQUIRE(two.lifted().size() == 3);
  CHECK(two.lifted()[1] == LiftedPoint{{Rat(1, 2)}, Rat(1, 2)});

  Gen g(50);
  for (int trial = 0; trial < 20; ++trial) {
    auto dom = g.lattice_polytope(2, 3, 6, 0, 3);
    if (!dom.is_full_dim()) continue;
    HFormPA h{dom, {}, Unit::real()};
    for (int k = 0; k < 4; ++k) h.tangents.push_back({g.rational_vector(2, -2, 2, 3), g.rational(-2, 2, 3)});
    auto v = hform_to_vform(h);
    CHECK(v.domain() == dom);
    for (int k = 0; k < 100; ++k) {
      std::vector<Rat> w;
      RatVector x = zeros(2);
      Rat total = 0;
      for (std::size_t i = 0; i < dom.vertices().size(); ++i) {
        w.emplace_back(g.uniform(0, 9));
        total += w.back();
      }
      if (total == 0) continue;
      for (std::size_t i = 0; i < w.size(); ++i) x = add(x, scale(dom.vertices()[i], w[i] / total));
      Rat direct = dot(h.tangents[0].u, x) + h.tangents[0].c;
      for (const auto& tg : h.tangents) direct = std::min<Rat>(direct, dot(tg.u, x) + tg.c);
      CHECK(v.eval(x) == direct);
      CHECK(eval(h, x) == direct);
    }
  }
}

TEST_CASE("entropy samples") {
  auto roof = EntropyRoof::from_data({{0}, {1}}, {1, 1});
  auto s = entropy_sample(roof, {Interval(0.0)});
  CHECK(s.x[0].contains(0.5));
  CHECK(s.value.contains(std::log(2.0)));
  CHECK(s.value.width() < 1e-12);

  // moving far along a vertex direction recovers log|a_j| at that vertex
  auto r3 = EntropyRoof::from_data({{0, 0}, {1, 0}, {0, 1}}, {2, 5, Rat(1, 3)});
  auto far = entropy_sample(r3, {Interval(-40.0), Interval(40.0)});
  CHECK(std::fabs(far.value.lo - std::log(5.0)) < 1e-6);
  CHECK(std::fabs(far.x[0].lo - 1.0) < 1e-6);
}

TEST_CASE("entropy samples match a brute-force simplex grid") {
  // exponents 0, 1, 2 in one variable: for fixed x the simplex slice is a segment
  const std::vector<Rat> a{3, Rat(1, 2), 2};
  auto roof = EntropyRoof::from_data({{0}, {1}, {2}}, a);
  for (double u : {-1.5, -0.3, 0.0, 0.7, 2.0}) {
    auto s = entropy_sample(roof, {Interval(u)});
    const double x = (s.x[0].lo + s.x[0].hi) / 2;
    // l1 + 2 l2 = x, l0 + l1 + l2 = 1, parametrized by l2
    double best = -1e300;
    const int steps = 200000;
    const double top = std::min(x / 2, 1.0);
    const double bottom = std::max(0.0, x - 1);
    for (int k = 0; k <= steps; ++k) {
      const double l2 = bottom + (top - bottom) * k / steps, l1 = x - 2 * l2, l0 = 1 - l1 - l2;
      if (l0 < 0 || l1 < 0) continue;
      double v = 0;
      const double ls[3] = {l0, l1, l2};
      for (int j = 0; j < 3; ++j)
        if (ls[j] > 0) v += ls[j] * std::log(a[j].get_d() / ls[j]);
      best = std::max(best, v);
    }
    CHECK(std::fabs(best - (s.value.lo + s.value.hi) / 2) < 1e-4);
  }
}

TEST_CASE("roof enclosures") {
  auto single = roof_enclosure(EntropyRoof::from_data({{1, 2}}, {5}), 0);
  CHECK(single.lower.domain().affine_dim() == 0);
  CHECK(single.lower.eval({1, 2}) <= single.upper.eval({1, 2}));
  CHECK(single.upper.eval({1, 2}) - single.lower.eval({1, 2}) < Rat(1, 1L << 38));
  const auto l5 = log_enclosure(5);
  CHECK(single.lower.eval({1, 2}) <= l5.lo);
  CHECK(single.upper.eval({1, 2}) >= l5.hi);

  for (long alpha : {2L, 3L, 7L}) {
    auto roof = EntropyRoof::from_poly(LaurentPoly::monomial({1}, 1) - LaurentPoly::constant(1, alpha));
    auto e = roof_enclosure(roof, 16);
    // concave upper <= affine comparison function iff it holds at the generators
    const RatInterval la = log_enclosure(alpha), l2 = log_enclosure(2);
    for (const auto& [x, t] : e.upper.lifted()) CHECK(t <= (1 - x[0]) * la.hi + l2.hi + Rat(1, 1000000));
  }
}

TEST_CASE("roof enclosure bracket the roof and tighten with the budget") {
  Gen g(51);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<LatticeVector> m;
    std::vector<Rat> a;
    const int r = static_cast<int>(g.uniform(2, 4));
    for (int j = 0; j < r; ++j) {
      m.push_back(g.lattice(2, 0, 3));
      a.push_back(g.nonzero_rational(1, 6, 4));
    }
    auto roof = EntropyRoof::from_data(m, a);
    if (!roof.domain.is_full_dim()) continue;
    Rat prev_width = -1;
    for (int budget : {4, 8, 16, 32}) {
      auto e = roof_enclosure(roof, budget);
      // sample true points of the graph and check the bracket
      for (double s : {-1.0, 0.0, 0.5}) {
        auto smp = entropy_sample(roof, {Interval(s), Interval(-s / 2)});
        const RatVector x{Rat(smp.x[0].lo), Rat(smp.x[1].lo)};
        if (!roof.domain.contains(x)) continue;
        CHECK(e.lower.eval(x).get_d() <= smp.value.hi + 1e-6);
        CHECK(e.upper.eval(x).get_d() >= smp.value.lo - 1e-6);
      }
      Rat width = 0;
      for (const auto& [x, t] : e.upper.lifted()) width = std::max<Rat>(width, t - e.lower.eval(x));
      for (const auto& [x, t] : e.lower.lifted()) width = std::max<Rat>(width, e.upper.eval(x) - t);
      if (prev_width >= 0) CHECK(width <= prev_width);
      prev_width = width;
    }
  }
}

TEST_CASE("mixed integral enclosures") {
  Gen g(52);
  auto f0 = random_pa(g, 2, 3, 5), f1 = random_pa(g, 2, 3, 5), f2 = random_pa(g, 2, 3, 5);
  auto r = mi_enclosure({f0, f1, f2}, {}, 8);
  CHECK(r.lo == r.hi);
  CHECK(r.lo == mixed_integral({f0, f1, f2}));

  auto sq = EntropyRoof::from_poly(LaurentPoly::monomial({1, 0}, 1) - LaurentPoly::constant(2, 3));
  auto sq2 = EntropyRoof::from_poly(LaurentPoly::monomial({0, 1}, 1) - LaurentPoly::constant(2, 3));
  auto zero = PAConcave::zero(standard_simplex(2));
  Rat prev = -1;
  for (int budget : {2, 4, 8, 16}) {
    auto e = mi_enclosure({zero}, {sq, sq2}, budget);
    CHECK(e.lo <= e.hi);
    if (prev >= 0) CHECK(e.width() <= prev);
    prev = e.width();
  }
  CHECK_THROWS_AS(mi_enclosure({PAConcave::zero(standard_simplex(2), Unit::log_prime(2))}, {sq, sq2}, 2), DomainError);
}
