#include "arbkk/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "arbkk/errors.hpp"

namespace arbkk {

LaurentPoly::LaurentPoly(int n, Terms terms) : n_(n) {
  for (auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != n) throw DimensionError("exponent length differs from n");
    if (c != 0) terms_.emplace(e, std::move(c));
  }
}

LaurentPoly LaurentPoly::monomial(const LatticeVector& exponent, const Rat& coeff) {
  return LaurentPoly(static_cast<int>(exponent.size()), Terms{{exponent, coeff}});
}

LaurentPoly LaurentPoly::constant(int n, const Rat& c) {
  return monomial(LatticeVector(n, 0), c);
}

std::vector<LatticeVector> LaurentPoly::exponents() const {
  std::vector<LatticeVector> out;
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

std::vector<Rat> LaurentPoly::coefficients() const {
  std::vector<Rat> out;
  for (const auto& [e, c] : terms_) out.push_back(c);
  return out;
}

int LaurentPoly::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t s = 0;
    for (auto k : e) {
      if (k < 0) throw DomainError("total degree of a polynomial with negative exponents");
      s += k;
    }
    deg = std::max<int>(deg, static_cast<int>(s));
  }
  return deg;
}

namespace {

Rat power(const Rat& base, std::int64_t k) {
  if (k == 0) return 1;
  if (base == 0) {
    if (k < 0) throw DomainError("negative power of zero");
    return 0;
  }
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return k > 0 ? make_rat(num, den) : make_rat(den, num);
}

}  // namespace

Rat LaurentPoly::evaluate(const RatVector& x) const {
  if (static_cast<int>(x.size()) != n_) throw DimensionError("point dimension differs from n");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < n_; ++i) t *= power(x[i], e[i]);
    total += t;
  }
  return total;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (o.n_ != n_) throw DimensionError("adding polynomials in different dimensions");
  Terms t = terms_;
  for (const auto& [e, c] : o.terms_) t[e] += c;
  return LaurentPoly(n_, std::move(t));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + o * Rat(-1); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (o.n_ != n_) throw DimensionError("multiplying polynomials in different dimensions");
  Terms t;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      LatticeVector e(n_);
      for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
      t[e] += c1 * c2;
    }
  return LaurentPoly(n_, std::move(t));
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
  Terms t = terms_;
  for (auto& [e, v] : t) v *= c;
  return LaurentPoly(n_, std::move(t));
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, int n) : s_(s), n_(n) {}

  LaurentPoly run() {
    LaurentPoly::Terms terms;
    skip();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip();
    }
    while (true) {
      auto [e, c] = term();
      if (negative) c = -c;
      terms[e] += c;
      skip();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
      skip();
    }
    return LaurentPoly(n_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  Int digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  std::int64_t small_int(const Int& z, std::size_t where) const {
    if (!z.fits_slong_p()) throw ParseError("integer out of range", where);
    return z.get_si();
  }

  std::pair<LatticeVector, Rat> term() {
    LatticeVector e(n_, 0);
    Rat c = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      Int num = digits();
      Int den = 1;
      skip();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip();
        std::size_t where = pos_;
        den = digits();
        if (den == 0) throw ParseError("zero denominator", where);
      }
      c = make_rat(num, den);
      have_coeff = true;
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip();
        if (at_end() || peek() != 'x') fail("expected variable after '*'");
      }
    }
    if (at_end() || peek() != 'x') {
      if (!have_coeff) fail("expected a coefficient or variable");
      return {e, c};
    }
    while (true) {
      factor(e);
      skip();
      if (at_end()) break;
      if (peek() == '*') {
        ++pos_;
        skip();
        if (at_end() || peek() != 'x') fail("expected variable after '*'");
        continue;
      }
      if (peek() == 'x') continue;
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("unexpected number");
      break;
    }
    return {e, c};
  }

  void factor(LatticeVector& e) {
    ++pos_;  // 'x'
    std::size_t where = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
    Int idx = digits();
    if (idx < 1 || idx > n_)
      throw ParseError("variable index x" + idx.get_str() + " out of range [1," +
                           std::to_string(n_) + "]",
                       where);
    std::int64_t k = 1;
    skip();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        neg = peek() == '-';
        ++pos_;
        skip();
      }
      std::size_t w = pos_;
      k = small_int(digits(), w);
      if (neg) k = -k;
    }
    e[idx.get_si() - 1] += k;
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const LatticeVector& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text, int n) {
  if (n < 1) throw DimensionError("number of variables must be positive");
  return Parser(text, n).run();
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::string mono = monomial_text(e);
    Rat a = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty())
      out += to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_string(a) + '*' + mono;
    first = false;
  }
  return out;
}

Polytope newton_polytope(const LaurentPoly& f) {
  if (f.is_zero()) throw DomainError("Newton polytope of the zero polynomial");
  return convex_hull(f.exponents());
}

}  // namespace arbkk
