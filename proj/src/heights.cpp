#include "arbkk/heights.hpp"

#include <algorithm>
#include <set>

#include "arbkk/errors.hpp"
#include "arbkk/mixed_volume.hpp"

namespace arbkk {
namespace {

void check_system(const MetricSpec& spec, const std::vector<LaurentPoly>& f) {
  const int n = static_cast<int>(f.size());
  if (n == 0) throw DimensionError("empty polynomial system");
  for (const auto& g : f) {
    if (g.n() != n) throw DimensionError("system must have n polynomials in n variables");
    if (g.is_zero()) throw DomainError("zero polynomial in the system");
  }
  if (spec.ambient_dim() != n) throw DimensionError("metric polytope dimension differs from the system");
  check_dimension_cap(n);
}

std::vector<Polytope> newton_polytopes(const std::vector<LaurentPoly>& f) {
  std::vector<Polytope> out;
  for (const auto& g : f) out.push_back(newton_polytope(g));
  return out;
}

PAConcave padic_roof(const std::vector<LatticeVector>& exps, const std::vector<Rat>& coeffs, const Int& p) {
  std::vector<LiftedPoint> pts;
  for (std::size_t j = 0; j < exps.size(); ++j) pts.emplace_back(to_rat(exps[j]), Rat(-ord_p(coeffs[j], p)));
  return PAConcave::from_points(pts, Unit::log_prime(p));
}

Rat monomial_value(const LatticeVector& m, const TorusPoint& x) {
  Rat out = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    Int num, den;
    const unsigned long e = static_cast<unsigned long>(m[i] < 0 ? -m[i] : m[i]);
    mpz_pow_ui(num.get_mpz_t(), x[i].get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x[i].get_den_mpz_t(), e);
    Rat f = m[i] > 0 ? Rat(num, den) : Rat(den, num);
    f.canonicalize();
    out *= f;
  }
  return out;
}

void add_primes(const Rat& q, std::set<Int>& primes) {
  const LogReal l = LogReal::log_of(q);
  for (const auto& [p, c] : l.coeffs()) primes.insert(p);
}

RatInterval archimedean_term(const MetricSpec& spec, const std::vector<LaurentPoly>& f, int budget) {
  std::vector<PAConcave> exact;
  std::vector<EntropyRoof> roofs;
  auto take = [&](Roof r) {
    if (auto* g = std::get_if<PAConcave>(&r))
      exact.push_back(*g);
    else
      roofs.push_back(std::get<EntropyRoof>(r));
  };
  take(roof_metric(spec, Place::infinity()));
  for (const auto& g : f) take(roof_function(g, Place::infinity()));
  return mi_enclosure(exact, roofs, budget);
}

bool nonnegative_exponents(const std::vector<LaurentPoly>& f) {
  for (const auto& g : f)
    for (const auto& [m, c] : g.terms())
      for (auto e : m)
        if (e < 0) return false;
  return true;
}

Check interval_le(const std::string& name, const RatInterval& a, const RatInterval& b, const Rat& slack) {
  CheckStatus s = CheckStatus::Inconclusive;
  if (a.hi <= b.lo + slack)
    s = CheckStatus::Pass;
  else if (a.lo > b.hi + slack)
    s = CheckStatus::Fail;
  return {name, s, interval_string({b.lo - a.hi, b.hi - a.lo})};
}

}  // namespace

MetricSpec MetricSpec::canonical(const Polytope& polytope) {
  if (polytope.is_empty()) throw DomainError("canonical metric on the empty polytope");
  if (!is_lattice(polytope)) throw DomainError("canonical metric needs a lattice polytope");
  MetricSpec s;
  s.kind_ = Kind::Canonical;
  s.polytope_ = polytope;
  return s;
}

MetricSpec MetricSpec::monomial(std::vector<LatticeVector> exponents, std::vector<Rat> coefficients) {
  if (exponents.empty() || exponents.size() != coefficients.size())
    throw DomainError("monomial metric needs equally many exponents and coefficients");
  for (const auto& c : coefficients)
    if (c == 0) throw DomainError("zero coefficient in a monomial metric");
  MetricSpec s;
  s.kind_ = Kind::Monomial;
  s.polytope_ = convex_hull(exponents);
  s.exponents_ = std::move(exponents);
  s.coefficients_ = std::move(coefficients);
  return s;
}

ZeroCycle::ZeroCycle(std::vector<std::pair<TorusPoint, long>> points) : points_(std::move(points)) {
  std::set<TorusPoint> seen;
  for (const auto& [x, mu] : points_) {
    if (mu < 1) throw DomainError("multiplicities must be positive");
    if (!points_.empty() && x.size() != points_[0].first.size()) throw DimensionError("cycle points of different dimensions");
    for (const auto& c : x)
      if (c == 0) throw DomainError("cycle point outside the torus");
    if (!seen.insert(x).second) throw DomainError("repeated cycle point");
  }
}

long ZeroCycle::degree() const {
  long d = 0;
  for (const auto& [x, mu] : points_) d += mu;
  return d;
}

Roof roof_function(const LaurentPoly& f, const Place& v) {
  if (f.is_zero()) throw DomainError("roof function of the zero polynomial");
  if (v.is_archimedean()) return EntropyRoof::from_poly(f);
  return padic_roof(f.exponents(), f.coefficients(), v.p());
}

Roof roof_metric(const MetricSpec& spec, const Place& v) {
  const Unit unit = v.is_archimedean() ? Unit::real() : Unit::log_prime(v.p());
  if (spec.is_canonical()) return PAConcave::zero(spec.polytope(), unit);
  if (v.is_archimedean()) return EntropyRoof::from_data(spec.exponents(), spec.coefficients());
  return padic_roof(spec.exponents(), spec.coefficients(), v.p());
}

int default_budget(int n) {
  if (n <= 2) return 64;
  if (n == 3) return 8;
  return 2;
}

RatInterval Theorem1Bound::enclosure() const { return exact.enclose() + archimedean; }

Theorem1Bound theorem1_bound(const MetricSpec& spec, const std::vector<LaurentPoly>& f, int budget) {
  check_system(spec, f);
  if (budget < 0) throw DomainError("negative budget");
  Theorem1Bound out;
  out.budget = budget;
  const auto places = relevant_places(f, spec.coefficients());
  for (const auto& v : places) {
    if (v.is_archimedean()) {
      out.archimedean = archimedean_term(spec, f, budget);
      out.per_place.push_back({v, LogReal(), out.archimedean});
      continue;
    }
    std::vector<PAConcave> g{std::get<PAConcave>(roof_metric(spec, v))};
    for (const auto& fi : f) g.push_back(std::get<PAConcave>(roof_function(fi, v)));
    LogReal term = LogReal::log_prime(v.p(), mixed_integral(g));
    out.exact += term;
    out.per_place.push_back({v, term, std::nullopt});
  }
  return out;
}

LogReal corollary_bound(const MetricSpec& spec, const std::vector<LaurentPoly>& f) {
  check_system(spec, f);
  const auto deltas = newton_polytopes(f);
  LogReal out;
  if (!spec.is_canonical()) out += mixed_volume(deltas) * length(spec.coefficients());
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Polytope> family{spec.polytope()};
    for (std::size_t j = 0; j < f.size(); ++j)
      if (j != i) family.push_back(deltas[j]);
    out += mixed_volume(family) * length(f[i]);
  }
  return out;
}

LogReal bezout_bound(const std::vector<LaurentPoly>& f) {
  std::vector<int> deg;
  for (const auto& g : f) {
    if (g.is_zero()) throw DomainError("zero polynomial in the system");
    deg.push_back(g.total_degree());
  }
  LogReal out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Rat w = 1;
    for (std::size_t j = 0; j < f.size(); ++j)
      if (j != i) w *= deg[j];
    out += w * length(f[i]);
  }
  return out;
}

LogReal point_height(const MetricSpec& spec, const TorusPoint& x) {
  if (static_cast<int>(x.size()) != spec.ambient_dim()) throw DimensionError("point dimension differs from the metric");
  for (const auto& c : x)
    if (c == 0) throw DomainError("point outside the torus");

  std::set<Int> primes;
  for (const auto& c : x) add_primes(c, primes);
  LogReal out;

  if (spec.is_canonical()) {
    // sum_v max_{m vertex} <m, log|x|_v>
    const auto& verts = spec.polytope().vertices();
    std::vector<LogReal> logs;
    for (const auto& c : x) logs.push_back(LogReal::log_of(c));
    std::optional<LogReal> best;
    for (const auto& m : verts) {
      LogReal s;
      for (std::size_t i = 0; i < x.size(); ++i) s += m[i] * logs[i];
      best = best ? logreal_max(*best, s) : s;
    }
    out += *best;
    for (const auto& p : primes) {
      std::optional<Rat> top;
      for (const auto& m : verts) {
        Rat s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s -= m[i] * ord_p(x[i], p);
        if (!top || s > *top) top = s;
      }
      out += LogReal::log_prime(p, *top);
    }
    return out;
  }

  std::vector<Rat> values;
  for (std::size_t j = 0; j < spec.exponents().size(); ++j) {
    values.push_back(spec.coefficients()[j] * monomial_value(spec.exponents()[j], x));
    add_primes(spec.coefficients()[j], primes);
  }
  Rat total = 0;
  for (const auto& v : values) total += abs(v);
  out += LogReal::log_of(total);
  for (const auto& p : primes) {
    long low = ord_p(values[0], p);
    for (const auto& v : values) low = std::min(low, ord_p(v, p));
    out += LogReal::log_prime(p, Rat(-low));
  }
  return out;
}

LogReal cycle_height(const MetricSpec& spec, const ZeroCycle& z) {
  LogReal out;
  for (const auto& [x, mu] : z.points()) out += Rat(mu) * point_height(spec, x);
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "";
}

CheckStatus BoundReport::status() const {
  CheckStatus out = CheckStatus::Pass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (c.status == CheckStatus::Inconclusive) out = CheckStatus::Inconclusive;
  }
  return out;
}

namespace {

BoundReport run_report(const MetricSpec& spec, const std::vector<LaurentPoly>& f, const ZeroCycle* z, int budget) {
  check_system(spec, f);
  if (budget < 0) throw DomainError("negative budget");
  BoundReport rep;
  rep.degree_bound = bkk_degree_bound(f);
  rep.corollary = corollary_bound(spec, f);
  if (nonnegative_exponents(f)) rep.bezout = bezout_bound(f);

  if (z) {
    for (std::size_t k = 0; k < z->points().size(); ++k) {
      const TorusPoint& x = z->points()[k].first;
      if (static_cast<int>(x.size()) != spec.ambient_dim()) throw DimensionError("cycle point dimension mismatch");
      for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].evaluate(x) != 0)
          throw ResidualError("cycle point " + std::to_string(k) + " is not a zero of polynomial " +
                                  std::to_string(i),
                              i);
    }
    rep.cycle_degree = z->degree();
    rep.height = cycle_height(spec, *z);
  }

  Theorem1Bound t1 = theorem1_bound(spec, f, budget);
  const RatInterval cor = rep.corollary.enclose();
  for (int step = 0;; ++step) {
    rep.checks.clear();
    const RatInterval t = t1.enclosure();
    if (z) {
      const Int deg(static_cast<long>(*rep.cycle_degree));
      rep.checks.push_back({"degree_le_bkk", deg <= rep.degree_bound ? CheckStatus::Pass : CheckStatus::Fail,
                            to_string(Int(rep.degree_bound - deg))});
      rep.checks.push_back(interval_le("height_le_theorem1", rep.height->enclose(), t, 0));
      rep.checks.push_back({"height_le_corollary",
                            logreal_compare(*rep.height, rep.corollary) <= 0 ? CheckStatus::Pass : CheckStatus::Fail,
                            to_string(rep.corollary - *rep.height)});
    }
    rep.checks.push_back(interval_le("theorem1_le_corollary", t, cor, kBoundSlack));
    const bool open = std::any_of(rep.checks.begin(), rep.checks.end(),
                                  [](const Check& c) { return c.status == CheckStatus::Inconclusive; });
    if (!open || step == 4) break;
    t1.budget = t1.budget == 0 ? 1 : 2 * t1.budget;
    t1.archimedean = archimedean_term(spec, f, t1.budget);
    for (auto& pc : t1.per_place)
      if (pc.place.is_archimedean()) pc.enclosure = t1.archimedean;
  }
  rep.theorem1 = std::move(t1);
  return rep;
}

}  // namespace

BoundReport bound_report(const MetricSpec& spec, const std::vector<LaurentPoly>& f, int budget) {
  return run_report(spec, f, nullptr, budget);
}

BoundReport verify(const std::vector<LaurentPoly>& f, const MetricSpec& spec, const ZeroCycle& z, int budget) {
  return run_report(spec, f, &z, budget);
}

}  // namespace arbkk
