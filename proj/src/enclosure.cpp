#include "arbkk/enclosure.hpp"

#include <algorithm>
#include <cmath>

#include "arbkk/errors.hpp"

namespace arbkk {
namespace {

constexpr int kSampleBits = 20;  // dyadic grid of the dual samples
constexpr int kWeightBits = 24;  // dyadic grid of the rational weights
constexpr int kValueBits = 40;   // dyadic grid of lifted values
constexpr double kSpread = 2.0;

Interval to_interval(const RatInterval& r) { return {Interval::from_rat(r.lo).lo, Interval::from_rat(r.hi).hi}; }

std::vector<Interval> log_coeff_intervals(const EntropyRoof& roof) {
  std::vector<Interval> out;
  for (const auto& a : roof.abs_coeffs) out.push_back(to_interval(log_enclosure(a, 64)));
  return out;
}

double radical_inverse(unsigned long i, unsigned base) {
  double f = 1, r = 0;
  while (i > 0) {
    f /= base;
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

unsigned nth_prime(int i) {
  static const unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  return primes[i % 12];
}

// Least-squares fit log|a_j| ~ sigma.y_j + b, in chart coordinates.
std::vector<double> balancing_slope(const std::vector<std::vector<double>>& ys, const std::vector<double>& logs) {
  const std::size_t k = ys[0].size();
  std::vector<std::vector<double>> m(k + 1, std::vector<double>(k + 2, 0.0));
  for (std::size_t j = 0; j < ys.size(); ++j) {
    std::vector<double> row = ys[j];
    row.push_back(1.0);
    for (std::size_t r = 0; r <= k; ++r) {
      for (std::size_t c = 0; c <= k; ++c) m[r][c] += row[r] * row[c];
      m[r][k + 1] += row[r] * logs[j];
    }
  }
  for (std::size_t c = 0; c <= k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r <= k; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    std::swap(m[piv], m[c]);
    if (std::fabs(m[c][c]) < 1e-300) return std::vector<double>(k, 0.0);
    for (std::size_t r = 0; r <= k; ++r) {
      if (r == c) continue;
      double f = m[r][c] / m[c][c];
      for (std::size_t j = c; j <= k + 1; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<double> sigma(k);
  for (std::size_t i = 0; i < k; ++i) sigma[i] = m[i][k + 1] / m[i][i];
  return sigma;
}

// Upper end of log sum_j exp(w_j).
double log_sum_exp_hi(const std::vector<Interval>& w) {
  double top = w[0].hi;
  for (const auto& v : w) top = std::max(top, v.hi);
  Interval s = 0.0;
  for (const auto& v : w) s = s + exp(v - Interval(top));
  return (log(s) + Interval(top)).hi;
}

}  // namespace

EntropyRoof EntropyRoof::from_data(const std::vector<LatticeVector>& exponents, const std::vector<Rat>& coeffs) {
  if (exponents.empty() || exponents.size() != coeffs.size())
    throw DimensionError("entropy roof needs equally many exponents and coefficients");
  EntropyRoof r;
  r.exponents = exponents;
  for (const auto& c : coeffs) {
    if (c == 0) throw DomainError("zero coefficient in an entropy roof");
    r.abs_coeffs.push_back(abs(c));
  }
  r.domain = convex_hull(exponents);
  return r;
}

EntropyRoof EntropyRoof::from_poly(const LaurentPoly& f) {
  if (f.is_zero()) throw DomainError("roof of the zero polynomial");
  return from_data(f.exponents(), f.coefficients());
}

std::vector<LogReal> EntropyRoof::logcoeffs() const {
  std::vector<LogReal> out;
  for (const auto& a : abs_coeffs) out.push_back(LogReal::log_of(a));
  return out;
}

EntropySample entropy_sample(const EntropyRoof& roof, const std::vector<Interval>& u) {
  const int n = roof.ambient_dim();
  if (static_cast<int>(u.size()) != n) throw DimensionError("dual point dimension mismatch");
  const auto logs = log_coeff_intervals(roof);
  const std::size_t r = roof.exponents.size();
  std::vector<Interval> w(r);
  for (std::size_t j = 0; j < r; ++j) {
    Interval s = 0.0;
    for (int i = 0; i < n; ++i) s = s + Interval(static_cast<double>(roof.exponents[j][i])) * u[i];
    w[j] = logs[j] - s;
  }
  double top = w[0].hi;
  for (const auto& v : w) top = std::max(top, v.hi);
  std::vector<Interval> e(r);
  Interval total = 0.0;
  for (std::size_t j = 0; j < r; ++j) {
    e[j] = exp(w[j] - Interval(top));
    total = total + e[j];
  }
  if (!total.is_finite()) throw DomainError("dual point too large for interval evaluation");
  EntropySample out;
  out.x.assign(n, Interval(0.0));
  out.value = 0.0;
  for (std::size_t j = 0; j < r; ++j) {
    Interval lam = e[j] / total;
    lam.hi = std::min(lam.hi, 1.0);
    for (int i = 0; i < n; ++i) out.x[i] = out.x[i] + lam * Interval(static_cast<double>(roof.exponents[j][i]));
    if (lam.hi <= 0) continue;
    // l log(a/l) = l (log a - log l), continuous at l = 0
    Interval lo_part = lam.lo > 0 ? lam * (logs[j] - log(lam)) : Interval(0.0);
    if (lam.lo <= 0) {
      Interval upper_part = Interval(lam.hi) * (logs[j] - log(Interval(lam.hi)));
      lo_part = Interval(std::min({0.0, upper_part.lo, lo_part.lo}), std::max({0.0, upper_part.hi, lo_part.hi}) + 1.0 / M_E);
    }
    out.value = out.value + lo_part;
  }
  return out;
}

std::vector<RatVector> dual_samples(const EntropyRoof& roof, int budget) {
  if (budget < 0) throw DomainError("negative budget");
  const int n = roof.ambient_dim();
  std::vector<RatVector> out{zeros(n)};
  const Polytope& dom = roof.domain;
  const int k = dom.affine_dim();
  if (k == 0 || budget == 0) return out;

  const AffineChart& chart = dom.chart();
  std::vector<std::vector<double>> ys;
  std::vector<double> logs;
  for (std::size_t j = 0; j < roof.exponents.size(); ++j) {
    RatVector y = chart.project(to_rat(roof.exponents[j]));
    std::vector<double> yd;
    for (const auto& c : y) yd.push_back(c.get_d());
    ys.push_back(std::move(yd));
    RatInterval l = log_enclosure(roof.abs_coeffs[j], 64);
    logs.push_back(Rat((l.lo + l.hi) / 2).get_d());
  }
  std::vector<double> width(k, 0.0);
  for (int i = 0; i < k; ++i) {
    double lo = ys[0][i], hi = ys[0][i];
    for (const auto& y : ys) {
      lo = std::min(lo, y[i]);
      hi = std::max(hi, y[i]);
    }
    width[i] = hi - lo;
  }
  const std::vector<double> center = balancing_slope(ys, logs);

  for (int s = 1; s <= budget; ++s) {
    RatVector sigma(k);
    for (int i = 0; i < k; ++i) {
      double v = center[i];
      if (s >= 2) {
        double h = radical_inverse(static_cast<unsigned long>(s - 1), nth_prime(i));
        v += kSpread * std::log(h / (1 - h)) / width[i];
      }
      sigma[i] = dyadic_floor(v, kSampleBits);
    }
    out.push_back(chart.push_forward(sigma));
  }
  return out;
}

RoofEnclosure roof_enclosure(const EntropyRoof& roof, int budget) {
  const int n = roof.ambient_dim();
  const std::size_t r = roof.exponents.size();
  const auto logs = log_coeff_intervals(roof);
  const auto samples = dual_samples(roof, budget);

  std::vector<LiftedPoint> lower;
  std::vector<LiftedPoint> vertex_caps;
  for (std::size_t j = 0; j < r; ++j) {
    lower.emplace_back(to_rat(roof.exponents[j]), dyadic_floor(logs[j].lo, kValueBits));
    vertex_caps.emplace_back(to_rat(roof.exponents[j]), dyadic_ceil(logs[j].hi, kValueBits));
  }

  std::vector<Tangent> tangents;
  for (const auto& u : samples) {
    std::vector<Interval> w(r);
    std::vector<double> wd(r);
    for (std::size_t j = 0; j < r; ++j) {
      w[j] = logs[j] - Interval::from_rat(dot(to_rat(roof.exponents[j]), u));
      wd[j] = (w[j].lo + w[j].hi) / 2;
    }
    tangents.push_back({u, dyadic_ceil(log_sum_exp_hi(w), kValueBits)});

    if (r == 1) continue;
    // Rational weights near the softmax; any point of the simplex gives a
    // point below the graph.
    const double top = *std::max_element(wd.begin(), wd.end());
    std::vector<double> p(r);
    double total = 0;
    for (std::size_t j = 0; j < r; ++j) total += p[j] = std::exp(wd[j] - top);
    const std::size_t jmax = std::max_element(p.begin(), p.end()) - p.begin();
    std::vector<Rat> lam(r);
    Rat rest = 1;
    for (std::size_t j = 0; j < r; ++j) {
      if (j == jmax) continue;
      lam[j] = dyadic_floor(p[j] / total + std::ldexp(1.0, -kWeightBits - 1), kWeightBits);
      rest -= lam[j];
    }
    if (rest <= 0) continue;
    lam[jmax] = rest;
    RatVector x = zeros(n);
    Interval value = 0.0;
    for (std::size_t j = 0; j < r; ++j) {
      if (lam[j] == 0) continue;
      x = add(x, scale(to_rat(roof.exponents[j]), lam[j]));
      Interval l(lam[j].get_d());
      value = value + l * (logs[j] - log(l));
    }
    lower.emplace_back(std::move(x), dyadic_floor(value.lo, kValueBits));
  }

  const Rat cap = dyadic_ceil(log(Interval(static_cast<double>(r))).hi, kValueBits);
  PAConcave vertex_env = PAConcave::from_points(vertex_caps);
  for (const auto& piece : vertex_env.pieces()) tangents.push_back({piece.slope, piece.intercept + cap});

  RoofEnclosure out{PAConcave::from_points(lower), hform_to_vform({roof.domain, tangents, Unit::real()})};
  return out;
}

RatInterval mi_enclosure(const std::vector<PAConcave>& exact, const std::vector<EntropyRoof>& roofs, int budget) {
  std::vector<PAConcave> lowers, uppers;
  for (const auto& g : exact) {
    if (!g.unit().is_real()) throw DomainError("mixed integral enclosure needs real-valued functions");
    lowers.push_back(g);
    uppers.push_back(g);
  }
  for (const auto& roof : roofs) {
    RoofEnclosure e = roof_enclosure(roof, budget);
    lowers.push_back(e.lower);
    uppers.push_back(e.upper);
  }
  return {mixed_integral(lowers), mixed_integral(uppers)};
}

}  // namespace arbkk
