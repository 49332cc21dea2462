#include "arbkk/logreal.hpp"

#include <mpfr.h>

#include "arbkk/errors.hpp"
#include "arbkk/factor.hpp"

namespace arbkk {
namespace {

constexpr int kStartBits = 64;
constexpr int kMaxBits = 1 << 16;

void add_factors(LogReal& out, const Int& n, int sign) {
  for (const auto& [p, e] : factorize(n))
    out += LogReal::log_prime(p, Rat(static_cast<long>(e) * sign));
}

}  // namespace

LogReal LogReal::log_of(const Rat& q) {
  if (q == 0) throw DomainError("log of zero");
  LogReal r;
  add_factors(r, abs(q.get_num()), 1);
  add_factors(r, q.get_den(), -1);
  return r;
}

LogReal LogReal::log_prime(const Int& p, const Rat& c) {
  LogReal r;
  r.add_term(p, c);
  return r;
}

Rat LogReal::coefficient(const Int& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void LogReal::add_term(const Int& p, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LogReal& LogReal::operator+=(const LogReal& o) {
  for (const auto& [p, c] : o.coeffs_) add_term(p, c);
  return *this;
}

LogReal& LogReal::operator-=(const LogReal& o) {
  for (const auto& [p, c] : o.coeffs_) add_term(p, -c);
  return *this;
}

LogReal LogReal::operator+(const LogReal& o) const {
  LogReal r = *this;
  r += o;
  return r;
}

LogReal LogReal::operator-(const LogReal& o) const {
  LogReal r = *this;
  r -= o;
  return r;
}

LogReal LogReal::operator-() const { return Rat(-1) * *this; }

LogReal operator*(const Rat& c, const LogReal& x) {
  LogReal r;
  if (c == 0) return r;
  for (const auto& [p, v] : x.coeffs()) r += LogReal::log_prime(p, c * v);
  return r;
}

RatInterval LogReal::enclose(int bits) const {
  mpfr_t lo, hi, t;
  mpfr_inits2(bits, lo, hi, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  for (const auto& [p, c] : coeffs_) {
    // c*log p, rounded toward the respective end point.
    const bool pos = c > 0;
    mpfr_set_z(t, p.get_mpz_t(), MPFR_RNDN);
    mpfr_log(t, t, pos ? MPFR_RNDD : MPFR_RNDU);
    mpfr_mul_q(t, t, c.get_mpq_t(), MPFR_RNDD);
    mpfr_add(lo, lo, t, MPFR_RNDD);
    mpfr_set_z(t, p.get_mpz_t(), MPFR_RNDN);
    mpfr_log(t, t, pos ? MPFR_RNDU : MPFR_RNDD);
    mpfr_mul_q(t, t, c.get_mpq_t(), MPFR_RNDU);
    mpfr_add(hi, hi, t, MPFR_RNDU);
  }
  RatInterval r;
  mpfr_get_q(r.lo.get_mpq_t(), lo);
  mpfr_get_q(r.hi.get_mpq_t(), hi);
  mpfr_clears(lo, hi, t, static_cast<mpfr_ptr>(nullptr));
  return r;
}

double LogReal::approx() const {
  RatInterval r = enclose(64);
  return Rat((r.lo + r.hi) / 2).get_d();
}

int logreal_compare(const LogReal& a, const LogReal& b) {
  LogReal d = a - b;
  if (d.is_zero()) return 0;
  for (int bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    RatInterval r = d.enclose(bits);
    if (r.lo > 0) return 1;
    if (r.hi < 0) return -1;
  }
  throw PrecisionError("could not resolve the sign of " + to_string(d));
}

LogReal logreal_max(const LogReal& a, const LogReal& b) { return logreal_compare(a, b) >= 0 ? a : b; }
LogReal logreal_min(const LogReal& a, const LogReal& b) { return logreal_compare(a, b) <= 0 ? a : b; }

std::string to_string(const LogReal& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : x.coeffs()) {
    Rat a = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    out += "log(" + to_string(p) + ")";
    first = false;
  }
  return out;
}

}  // namespace arbkk
