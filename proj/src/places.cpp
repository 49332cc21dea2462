#include "arbkk/places.hpp"

#include <algorithm>
#include <set>

#include "arbkk/errors.hpp"
#include "arbkk/factor.hpp"

namespace arbkk {

Place Place::prime(const Int& p) {
  if (!is_prime(p)) throw DomainError(to_string(p) + " is not prime");
  return Place(p);
}

std::string to_string(const Place& v) { return v.is_archimedean() ? "inf" : to_string(v.p()); }

long ord_p(const Rat& q, const Int& p) {
  if (q == 0) throw DomainError("order of zero");
  Int tmp;
  long num = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_num_mpz_t(), p.get_mpz_t()));
  long den = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_den_mpz_t(), p.get_mpz_t()));
  return num - den;
}

Rat abs_v(const Rat& q, const Place& v) {
  if (q == 0) return 0;
  if (v.is_archimedean()) return abs(q);
  long k = ord_p(q, v.p());
  Int pk;
  mpz_pow_ui(pk.get_mpz_t(), v.p().get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  return k >= 0 ? make_rat(1, pk) : Rat(pk);
}

LogReal log_abs_v(const Rat& q, const Place& v) {
  if (v.is_archimedean()) return LogReal::log_of(q);
  return LogReal::log_prime(v.p(), Rat(-ord_p(q, v.p())));
}

namespace {

void collect(const Rat& q, std::set<Int>& primes) {
  if (q == 0) return;
  for (const auto& [p, e] : factorize(abs(q.get_num()))) primes.insert(p);
  for (const auto& [p, e] : factorize(q.get_den())) primes.insert(p);
}

}  // namespace

std::vector<Place> relevant_places(const std::vector<LaurentPoly>& polys,
                                   const std::vector<Rat>& numbers) {
  std::set<Int> primes;
  for (const auto& f : polys)
    for (const auto& [e, c] : f.terms()) collect(c, primes);
  for (const auto& q : numbers) collect(q, primes);
  std::vector<Place> out{Place::infinity()};
  for (const auto& p : primes) out.push_back(Place::prime(p));
  return out;
}

LogReal length_v(const std::vector<Rat>& coeffs, const Place& v) {
  if (coeffs.empty()) throw DomainError("length of the zero polynomial");
  if (v.is_archimedean()) {
    Rat s = 0;
    for (const auto& c : coeffs) s += abs(c);
    if (s == 0) throw DomainError("length of the zero polynomial");
    return LogReal::log_of(s);
  }
  bool any = false;
  long min_ord = 0;
  for (const auto& c : coeffs) {
    if (c == 0) continue;
    long k = ord_p(c, v.p());
    min_ord = any ? std::min(min_ord, k) : k;
    any = true;
  }
  if (!any) throw DomainError("length of the zero polynomial");
  return LogReal::log_prime(v.p(), Rat(-min_ord));
}

LogReal length_v(const LaurentPoly& f, const Place& v) { return length_v(f.coefficients(), v); }

LogReal length(const std::vector<Rat>& coeffs) {
  LogReal total;
  std::vector<LaurentPoly> none;
  for (const auto& v : relevant_places(none, coeffs)) total += length_v(coeffs, v);
  return total;
}

LogReal length(const LaurentPoly& f) { return length(f.coefficients()); }

std::vector<LogReal> val_v(const TorusPoint& x, const Place& v) {
  std::vector<LogReal> out;
  out.reserve(x.size());
  for (const auto& c : x) {
    if (c == 0) throw DomainError("torus point with a zero coordinate");
    out.push_back(-log_abs_v(c, v));
  }
  return out;
}

}  // namespace arbkk
