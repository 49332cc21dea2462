// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance        run every criterion
//   acceptance 3      run criterion 3 only
//
// Exit status is non-zero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"

#include "arbkk/commands.hpp"
#include "arbkk/enclosure.hpp"
#include "arbkk/factor.hpp"
#include "arbkk/heights.hpp"
#include "arbkk/mixed_volume.hpp"
#include "arbkk/resultant.hpp"

using namespace arbkk;
using oracle::Gen;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "FAILED: ";
      detail << what << "; ";
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

LogReal L(long q) { return LogReal::log_of(Rat(q)); }

// rhs - lhs as a decimal interval
std::string gap(const RatInterval& lhs, const RatInterval& rhs) { return interval_string({rhs.lo - lhs.hi, rhs.hi - lhs.lo}, 6); }

PAConcave random_pa(Gen& g, int n, int kmin, int kmax) {
  std::vector<LiftedPoint> pts;
  const int k = static_cast<int>(g.uniform(kmin, kmax));
  for (int i = 0; i < k; ++i) pts.emplace_back(oracle::rat(g.lattice(n, 0, 3)), g.rational(-4, 4, 6));
  return PAConcave::from_points(pts);
}

LaurentPoly random_poly(Gen& g, int n, int terms, long lo, long hi) {
  LaurentPoly f(n);
  while (static_cast<int>(f.size()) < std::min(terms, 2))
    for (int k = 0; k < terms; ++k) f = f + LaurentPoly::monomial(g.lattice(n, lo, hi), g.nonzero_rational(-20, 20, 12));
  return f;
}

std::set<Int> prime_divisors(const Rat& q) {
  std::set<Int> out;
  for (const Int& z : {Int(abs(q.get_num())), Int(q.get_den())})
    for (const auto& [p, e] : factorize(z)) out.insert(p);
  return out;
}

// 1. Tower example, n=3, d=2, alpha=2.
void tower_example(Outcome& o) {
  const auto t0 = Clock::now();
  const auto f = tower_system(3, 2, 2);
  const auto p = tower_point(3, 2, 2);
  const auto iota1 = simplex_metric(3), iota2 = twisted_metric(3, 2);
  o.require(point_height(iota1, p) == Rat(7) * L(2), "h(iota1) = 7 log 2");
  o.require(point_height(iota2, p) == L(2), "h(iota2) = log 2");
  o.require(corollary_bound(iota1, f) == Rat(7) * L(3), "corollary(iota1) = 7 log 3");
  o.require(corollary_bound(iota2, f) == Rat(3) * L(3), "corollary(iota2) = 3 log 3");
  const auto t = theorem1_bound(iota2, f, default_budget(3)).enclosure();
  const auto goal = (Rat(3) * L(3)).enclose();
  o.require(t.hi <= goal.lo + Rat(1, 1000000), "theorem1(iota2) <= 3 log 3 + 1e-6");
  const double secs = seconds_since(t0);
  o.require(secs < 5, "runtime < 5 s");
  o.detail << "theorem1(iota2) " << interval_string(t, 8) << " vs 3 log 3 " << interval_string(goal, 8) << ", " << secs
           << " s";
}

// 2. Diagonal system x_i - 3 in two variables with the canonical simplex metric.
void entropy_example(Outcome& o) {
  const auto t0 = Clock::now();
  const auto f = diagonal_system(2, 3);
  const auto spec = simplex_metric(2);
  const LogReal h = point_height(spec, {3, 3});
  o.require(h == L(3), "height = log 3");
  const auto t = theorem1_bound(spec, f, 64).enclosure();
  const auto target = (Rat(3) * L(2) + L(3)).enclose();
  o.require(t.hi <= target.lo + Rat(1, 1000000), "theorem1 <= 3 log 2 + log 3 + 1e-6");
  const LogReal cor = corollary_bound(spec, f);
  o.require(cor == Rat(2) * L(4), "corollary = 2 log 4");
  o.require(h.enclose().hi <= t.lo, "height <= theorem1");
  o.require(t.hi <= cor.enclose().lo, "theorem1 <= corollary");
  const double secs = seconds_since(t0);
  o.require(secs < 10, "runtime < 10 s");
  o.detail << "theorem1 " << interval_string(t, 8) << ", target " << interval_string(target, 8) << ", corollary "
           << to_string(cor) << ", " << secs << " s";
}

// 3. Three mixed volume algorithms agree.
void mixed_volume_agreement(Outcome& o) {
  const auto t0 = Clock::now();
  Gen g(301);
  int families = 0, disagree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 2 ? 3 : 2;
    std::vector<Polytope> ps;
    for (int i = 0; i < n; ++i) ps.push_back(g.lattice_polytope(n, 1, 6, 0, 4));
    const Rat a = mixed_volume(ps), b = mixed_volume_facet(ps), c = mixed_volume_interpolation(ps);
    if (a != b || a != c || !is_integral({a})) ++disagree;
    ++families;
  }
  const double secs = seconds_since(t0);
  o.require(disagree == 0, std::to_string(disagree) + " families disagree");
  o.require(secs < 60, "runtime < 60 s");
  o.detail << families << " families, " << secs << " s";
}

// 4. Mixed integral identities.
void mixed_integral_identities(Outcome& o) {
  Gen g(401);
  int diag = 0, perm = 0, add = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = trial % 2 ? 2 : 1;
    auto f = random_pa(g, n, 1, 6);
    std::vector<PAConcave> same(n + 1, f);
    if (mixed_integral(same) == Rat(factorial(n + 1)) * f.integral()) ++diag;
  }
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<PAConcave> gs{random_pa(g, 2, 2, 5), random_pa(g, 2, 2, 5), random_pa(g, 2, 2, 5)};
    const Rat base = mixed_integral(gs);
    std::vector<int> idx{0, 1, 2};
    bool ok = true;
    while (std::next_permutation(idx.begin(), idx.end()))
      ok = ok && mixed_integral({gs[idx[0]], gs[idx[1]], gs[idx[2]]}) == base;
    if (ok) ++perm;
  }
  for (int trial = 0; trial < 50; ++trial) {
    const int n = trial % 2 ? 2 : 1;
    auto a = random_pa(g, n, 1, 4), b = random_pa(g, n, 1, 4);
    std::vector<PAConcave> rest;
    for (int i = 0; i < n; ++i) rest.push_back(random_pa(g, n, 1, 4));
    auto with = [&](const PAConcave& first) {
      std::vector<PAConcave> v{first};
      v.insert(v.end(), rest.begin(), rest.end());
      return mixed_integral(v);
    };
    if (with(sup_convolution(a, b)) == with(a) + with(b)) ++add;
  }
  o.require(diag == 100, "MI(g..g) = (n+1)! int g on " + std::to_string(diag) + "/100");
  o.require(perm == 30, "permutation invariance on " + std::to_string(perm) + "/30");
  o.require(add == 50, "additivity on " + std::to_string(add) + "/50");
  o.detail << "diagonal " << diag << "/100, permutations " << perm << "/30, additivity " << add << "/50";
}

// 5. The maximum of every roof is the local length.
void roof_maxima(Outcome& o) {
  Gen g(501);
  const int budget = 8;
  int polys = 0, places = 0;
  Rat widest = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = trial % 2 ? 2 : 1;
    auto f = random_poly(g, n, static_cast<int>(g.uniform(2, 4)), -2, 3);
    ++polys;
    for (const auto& v : relevant_places({f})) {
      ++places;
      if (!v.is_archimedean()) {
        auto roof = std::get<PAConcave>(roof_function(f, v));
        o.require(LogReal::log_prime(v.p(), roof.max_value()) == length_v(f, v),
                  "p-adic max at " + to_string(v) + " for " + to_string(f));
        continue;
      }
      auto e = roof_enclosure(std::get<EntropyRoof>(roof_function(f, v)), budget);
      const RatInterval box{e.lower.max_value(), e.upper.max_value()};
      const RatInterval want = length_v(f, v).enclose();
      widest = std::max(widest, box.width());
      o.require(box.lo <= want.lo && want.hi <= box.hi, "archimedean enclosure misses l for " + to_string(f));
      o.require(box.width() < Rat(1, 1000), "archimedean width >= 1e-3 for " + to_string(f));
    }
  }
  o.detail << polys << " polynomials, " << places << " places, budget " << budget << ", widest archimedean box "
           << decimal_up(widest, 3);
}

// 6. Order of the bounds, and BKK counts of binomial systems.
void bound_order(Outcome& o) {
  Gen g(601);
  int instances = 0;
  Rat tightest = 1000;
  for (int trial = 0; trial < 24; ++trial) {
    const int n = trial % 2 ? 2 : 1;
    std::vector<LaurentPoly> f;
    for (int i = 0; i < n; ++i) f.push_back(random_poly(g, n, static_cast<int>(g.uniform(2, 3)), 0, 2));
    std::optional<MetricSpec> spec;
    if (trial % 3 == 0) {
      std::vector<LatticeVector> m;
      std::vector<Rat> a;
      for (int j = 0; j < 3; ++j) {
        m.push_back(g.lattice(n, 0, 2));
        a.push_back(g.nonzero_rational(-5, 5, 3));
      }
      spec = MetricSpec::monomial(m, a);
    } else {
      Polytope p(n);
      while (p.is_empty() || p.affine_dim() < 1) p = g.lattice_polytope(n, 2, 4, 0, 2);
      spec = MetricSpec::canonical(p);
    }
    const auto rep = bound_report(*spec, f, 8);
    const RatInterval t = rep.theorem1.enclosure(), cor = rep.corollary.enclose();
    tightest = std::min(tightest, Rat(cor.lo - t.hi));
    o.require(t.hi <= cor.lo + kBoundSlack, "theorem1 > corollary on instance " + std::to_string(trial) + " (gap " +
                                                 gap(t, cor) + ")");
    ++instances;
  }
  int systems = 0;
  for (int a1 = 1; a1 <= 3; ++a1)
    for (int a2 = 1; a2 <= 3; ++a2)
      for (int a3 = 1; a3 <= 3; ++a3) {
        const int a[3] = {a1, a2, a3};
        std::vector<LaurentPoly> f;
        long count = 1;
        for (int i = 0; i < 3; ++i) {
          LatticeVector e(3, 0);
          e[i] = a[i];
          const Rat c = g.nonzero_rational(-9, 9, 5);
          f.push_back(LaurentPoly::monomial(e, 1) - LaurentPoly::constant(3, c));
          oracle::UPoly q(a[i] + 1, Rat(0));
          q[0] = -c;
          q[a[i]] = 1;
          count *= oracle::distinct_roots(q);
        }
        o.require(bkk_degree_bound(f) == count && count == a1 * a2 * a3, "binomial count");
        ++systems;
      }
  o.detail << instances << " bound instances (smallest margin " << decimal_down(tightest, 6) << "), " << systems
           << " binomial systems";
}

// 7. Resultant length against its bound on products of linear factors.
void resultant_bound(Outcome& o) {
  Gen g(701);
  int systems = 0, equal = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(g.uniform(1, 2));
    std::vector<LaurentPoly> f;
    std::vector<std::vector<Rat>> roots(n);
    for (int i = 0; i < n; ++i) {
      const int k = static_cast<int>(g.uniform(1, 2));
      LaurentPoly fi = LaurentPoly::constant(n, 1);
      while (static_cast<int>(roots[i].size()) < k) {
        const Rat r = g.nonzero_rational(-6, 6, 4);
        if (std::find(roots[i].begin(), roots[i].end(), r) != roots[i].end()) continue;
        roots[i].push_back(r);
        LatticeVector e(n, 0);
        e[i] = 1;
        fi = fi * (LaurentPoly::monomial(e, 1) - LaurentPoly::constant(n, r));
      }
      f.push_back(fi);
    }
    // Z(f) is the full grid of root tuples
    std::vector<std::pair<TorusPoint, long>> pts{{TorusPoint{}, 1}};
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<TorusPoint, long>> next;
      for (const auto& [x, mu] : pts)
        for (const auto& r : roots[i]) {
          TorusPoint y = x;
          y.push_back(r);
          next.emplace_back(y, mu);
        }
      pts = next;
    }
    const ZeroCycle z(pts);
    std::vector<LatticeVector> m0;
    std::vector<Rat> a0;
    const int r = static_cast<int>(g.uniform(2, 3));
    for (int j = 0; j < r; ++j) {
      m0.push_back(g.lattice(n, -1, 2));
      a0.push_back(g.nonzero_rational(-4, 4, 3));
    }
    const auto coeffs = resultant_expand(monomial_pushforward(z, m0, a0)).coefficients();
    const LogReal bound = resultant_length_bound(f, m0, a0);
    const int sign = logreal_compare(length(coeffs), bound);
    o.require(sign <= 0, "system " + std::to_string(trial) + " exceeds its bound");
    if (sign == 0) {
      // equal values cannot be separated by enclosures
      ++equal;
    } else {
      const RatInterval lhs = length_enclosure(coeffs);
      const RatInterval rhs = bound.enclose();
      o.require(lhs.hi <= rhs.lo, "system " + std::to_string(trial) + " gap " + gap(lhs, rhs));
    }
    ++systems;
  }
  o.detail << systems << " systems, " << equal << " with equality";
}

// 8. Product formula.
void product_formula(Outcome& o) {
  Gen g(801);
  int zero = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Rat q = g.nonzero_rational(-100000, 100000, 100000);
    LogReal sum = log_abs_v(q, Place::infinity());
    for (const auto& p : prime_divisors(q)) sum += log_abs_v(q, Place::prime(p));
    if (sum.is_zero()) ++zero;
  }
  o.require(zero == 1000, std::to_string(1000 - zero) + " rationals violate the product formula");
  o.detail << zero << "/1000 exact zeros";
}

// 9. Archimedean mixed integral widths under budget doubling.
void refinement(Outcome& o) {
  Gen g(901);
  int pairs = 0, strict = 0, increases = 0;
  for (int trial = 0; trial < 15; ++trial) {
    const auto f1 = random_poly(g, 2, static_cast<int>(g.uniform(2, 3)), 0, 2);
    const auto f2 = random_poly(g, 2, static_cast<int>(g.uniform(2, 3)), 0, 2);
    const std::vector<EntropyRoof> roofs{EntropyRoof::from_poly(f1), EntropyRoof::from_poly(f2)};
    const std::vector<PAConcave> exact{PAConcave::zero(standard_simplex(2))};
    std::optional<Rat> prev;
    for (int budget : {2, 4, 8, 16}) {
      const Rat w = mi_enclosure(exact, roofs, budget).width();
      if (prev) {
        ++pairs;
        if (w < *prev) ++strict;
        if (w > *prev) ++increases;
      }
      prev = w;
    }
  }
  o.require(increases == 0, std::to_string(increases) + " widths increased");
  o.require(10 * strict >= 9 * pairs, "strict decrease in " + std::to_string(strict) + "/" + std::to_string(pairs));
  o.detail << "strict decrease in " << strict << "/" << pairs << " doublings, " << increases << " increases";
}

struct Criterion {
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {"tower example exact values and first bound", tower_example},
      {"diagonal entropy example", entropy_example},
      {"mixed volume triple agreement", mixed_volume_agreement},
      {"mixed integral identities", mixed_integral_identities},
      {"roof maxima equal local lengths", roof_maxima},
      {"bound ordering and binomial counts", bound_order},
      {"resultant length bound", resultant_bound},
      {"product formula", product_formula},
      {"enclosure refinement", refinement},
  };
  int first = 1, last = static_cast<int>(all.size());
  if (argc > 1) {
    first = last = std::atoi(argv[1]);
    if (first < 1 || first > static_cast<int>(all.size())) {
      std::cerr << "criterion must be in 1.." << all.size() << "\n";
      return 2;
    }
  }
  bool ok = true;
  for (int k = first; k <= last; ++k) {
    Outcome o;
    try {
      all[k - 1].run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "[" << (o.pass ? "PASS" : "FAIL") << "] " << k << " " << all[k - 1].name << ": " << o.detail.str()
              << std::endl;
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
