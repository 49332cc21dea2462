#include "arbkk/interval.hpp"

#include <mpfr.h>

#include <cmath>
#include <limits>

#include "arbkk/errors.hpp"

namespace arbkk {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

// RAII wrapper; only what this file needs.
struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

std::string render(const Rat& q, int digits, mpfr_rnd_t rnd) {
  if (q == 0) return "0";
  Mpfr x(256 + 4 * digits);
  mpfr_set_q(x.v, q.get_mpq_t(), rnd);
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, digits, x.v, rnd);
  std::string s(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (s[0] == '-') {
    sign = "-";
    s.erase(0, 1);
  }
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  // value = 0.s * 10^e
  std::string out;
  if (e > 0 && e <= digits) {
    if (static_cast<long>(s.size()) <= e)
      out = s + std::string(e - s.size(), '0');
    else
      out = s.substr(0, e) + "." + s.substr(e);
  } else if (e <= 0 && e > -5) {
    out = "0." + std::string(-e, '0') + s;
  } else {
    out = s.substr(0, 1);
    if (s.size() > 1) out += "." + s.substr(1);
    out += "e" + std::to_string(e - 1);
  }
  return sign + out;
}

}  // namespace

Interval::Interval(double l, double h) : lo(l), hi(h) {
  if (!(l <= h)) throw InternalError("interval with lo > hi");
}

Interval Interval::from_rat(const Rat& q) {
  Mpfr x(53);
  Interval r;
  mpfr_set_q(x.v, q.get_mpq_t(), MPFR_RNDD);
  r.lo = mpfr_get_d(x.v, MPFR_RNDD);
  mpfr_set_q(x.v, q.get_mpq_t(), MPFR_RNDU);
  r.hi = mpfr_get_d(x.v, MPFR_RNDU);
  return r;
}

bool Interval::is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }

Interval operator+(const Interval& a, const Interval& b) {
  return {down(a.lo + b.lo), up(a.hi + b.hi)};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {down(a.lo - b.hi), up(a.hi - b.lo)};
}

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  double lo = p[0], hi = p[0];
  for (double v : p) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {down(lo), up(hi)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw DomainError("interval division by an interval containing 0");
  double p[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  double lo = p[0], hi = p[0];
  for (double v : p) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {down(lo), up(hi)};
}

Interval exp(const Interval& a) {
  Mpfr x(53);
  Interval r;
  mpfr_set_d(x.v, a.lo, MPFR_RNDN);
  mpfr_exp(x.v, x.v, MPFR_RNDD);
  r.lo = mpfr_get_d(x.v, MPFR_RNDD);
  mpfr_set_d(x.v, a.hi, MPFR_RNDN);
  mpfr_exp(x.v, x.v, MPFR_RNDU);
  r.hi = mpfr_get_d(x.v, MPFR_RNDU);
  return r;
}

Interval log(const Interval& a) {
  if (!(a.lo > 0)) throw DomainError("interval log of a non-positive interval");
  Mpfr x(53);
  Interval r;
  mpfr_set_d(x.v, a.lo, MPFR_RNDN);
  mpfr_log(x.v, x.v, MPFR_RNDD);
  r.lo = mpfr_get_d(x.v, MPFR_RNDD);
  mpfr_set_d(x.v, a.hi, MPFR_RNDN);
  mpfr_log(x.v, x.v, MPFR_RNDU);
  r.hi = mpfr_get_d(x.v, MPFR_RNDU);
  return r;
}

RatInterval::RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw InternalError("interval with lo > hi");
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator*(const Rat& c, const RatInterval& a) {
  if (c >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

RatInterval log_enclosure(const Rat& q, int bits) {
  if (q <= 0) throw DomainError("log of a non-positive rational");
  if (q == 1) return Rat(0);
  Mpfr x(bits);
  RatInterval r;
  Rat tmp;
  mpfr_set_q(x.v, q.get_mpq_t(), MPFR_RNDD);
  mpfr_log(x.v, x.v, MPFR_RNDD);
  mpfr_get_q(tmp.get_mpq_t(), x.v);
  r.lo = tmp;
  mpfr_set_q(x.v, q.get_mpq_t(), MPFR_RNDU);
  mpfr_log(x.v, x.v, MPFR_RNDU);
  mpfr_get_q(tmp.get_mpq_t(), x.v);
  r.hi = tmp;
  return r;
}

std::string decimal_down(const Rat& q, int digits) { return render(q, digits, MPFR_RNDD); }
std::string decimal_up(const Rat& q, int digits) { return render(q, digits, MPFR_RNDU); }
std::string decimal_nearest(const Rat& q, int digits) { return render(q, digits, MPFR_RNDN); }

std::string interval_string(const RatInterval& r, int digits) {
  return "[" + decimal_down(r.lo, digits) + ", " + decimal_up(r.hi, digits) + "]";
}

}  // namespace arbkk
