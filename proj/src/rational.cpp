#include "arbkk/rational.hpp"

#include <cmath>
#include <utility>

#include "arbkk/errors.hpp"

namespace arbkk {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool parse_digits(std::string_view s, Int& out) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  out.set_str(std::string(s), 10);
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string_view body = text.substr(pos);
  while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
  auto slash = body.find('/');
  Int num, den = 1;
  if (!parse_digits(body.substr(0, slash), num))
    throw ParseError("invalid rational '" + std::string(text) + "'", pos);
  if (slash != std::string_view::npos &&
      !parse_digits(body.substr(slash + 1), den))
    throw ParseError("invalid rational '" + std::string(text) + "'", pos + slash + 1);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return make_rat(num, den);
}

std::string to_string(const Rat& q) { return q.get_str(10); }
std::string to_string(const Int& z) { return z.get_str(10); }

RatVector to_rat(const LatticeVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (auto c : v) r.emplace_back(static_cast<long>(c));
  return r;
}

bool is_integral(const RatVector& v) {
  for (const auto& c : v)
    if (c.get_den() != 1) return false;
  return true;
}

Rat dot(const RatVector& a, const RatVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector add(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector scale(const RatVector& a, const Rat& s) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

RatVector zeros(std::size_t n) { return RatVector(n, Rat(0)); }

Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

Rat dyadic_floor(double value, int bits) {
  double scaled = std::ldexp(value, bits);
  Int z(std::floor(scaled));
  return make_rat(z, Int(1) << bits);
}

Rat dyadic_ceil(double value, int bits) {
  double scaled = std::ldexp(value, bits);
  Int z(std::ceil(scaled));
  return make_rat(z, Int(1) << bits);
}

Rat dyadic_floor(const Rat& value, int bits) {
  Int scaled = value.get_num() << bits;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), value.get_den_mpz_t());
  return make_rat(q, Int(1) << bits);
}

Rat dyadic_ceil(const Rat& value, int bits) {
  Int scaled = value.get_num() << bits;
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), value.get_den_mpz_t());
  return make_rat(q, Int(1) << bits);
}

int rank(std::vector<RatVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

int rank(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Int a = rows[r][c], b = rows[i][c];
      Int g = gcd(a, b);
      a /= g;
      b /= g;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = a * rows[i][j] - b * rows[r][j];
    }
    ++r;
  }
  return r;
}

Rat determinant(std::vector<RatVector> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

RatVector solve(std::vector<RatVector> m, RatVector b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw DomainError("singular linear system");
    std::swap(m[piv], m[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
      b[i] -= f * b[c];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace arbkk
