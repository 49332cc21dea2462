#include "arbkk/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "arbkk/errors.hpp"

namespace arbkk {
namespace {

constexpr unsigned kSieveLimit = 1u << 16;
constexpr std::size_t kCacheLimit = 100000;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kSieveLimit, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i < kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = static_cast<unsigned long>(i) * i; j < kSieveLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's variant of Pollard rho; n odd composite without small factors.
Int pollard_brent(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1, m = 128;
    auto f = [&](const Int& v) {
      Int t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs(x - y);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Int diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Int& n, std::map<Int, unsigned long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n);
  split(d, out);
  split(n / d, out);
}

std::mutex g_mutex;
std::map<Int, std::vector<std::pair<Int, unsigned long>>> g_cache;

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::pair<Int, unsigned long>> factorize(const Int& n) {
  if (n < 1) throw DomainError("factorization of a non-positive integer");
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_cache.find(n);
    if (it != g_cache.end()) return it->second;
  }
  std::map<Int, unsigned long> found;
  Int rest = n;
  for (unsigned p : small_primes()) {
    if (Int(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++found[Int(p)];
    }
  }
  if (rest > 1) {
    if (rest < Int(kSieveLimit) * kSieveLimit)
      ++found[rest];
    else
      split(rest, found);
  }
  std::vector<std::pair<Int, unsigned long>> result(found.begin(), found.end());
  std::lock_guard<std::mutex> lock(g_mutex);
  if (g_cache.size() >= kCacheLimit) g_cache.clear();
  g_cache.emplace(n, result);
  return result;
}

}  // namespace arbkk
