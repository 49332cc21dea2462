#include "arbkk/resultant.hpp"

#include "arbkk/errors.hpp"

namespace arbkk {

LaurentPoly resultant_expand(const ProjectiveCycle& cycle) {
  if (cycle.empty()) throw DomainError("empty cycle");
  const int vars = static_cast<int>(cycle[0].first.size());
  if (vars == 0) throw DimensionError("projective point without coordinates");
  LaurentPoly out = LaurentPoly::constant(vars, 1);
  for (const auto& [q, mu] : cycle) {
    if (static_cast<int>(q.size()) != vars) throw DimensionError("projective points of different dimensions");
    if (mu < 1) throw DomainError("multiplicities must be positive");
    LaurentPoly form(vars);
    bool nonzero = false;
    for (int j = 0; j < vars; ++j) {
      if (q[j] == 0) continue;
      nonzero = true;
      LatticeVector e(vars, 0);
      e[j] = 1;
      form = form + LaurentPoly::monomial(e, q[j]);
    }
    if (!nonzero) throw DomainError("all-zero projective coordinates");
    for (long k = 0; k < mu; ++k) out = out * form;
  }
  return out;
}

ProjectiveCycle monomial_pushforward(const ZeroCycle& z, const std::vector<LatticeVector>& m0,
                                     const std::vector<Rat>& a0) {
  if (m0.empty() || m0.size() != a0.size()) throw DomainError("monomial map needs equally many exponents and coefficients");
  ProjectiveCycle out;
  for (const auto& [x, mu] : z.points()) {
    RatVector q;
    for (std::size_t j = 0; j < m0.size(); ++j) {
      if (m0[j].size() != x.size()) throw DimensionError("exponent dimension differs from the point");
      q.push_back(a0[j] * LaurentPoly::monomial(m0[j], 1).evaluate(x));
    }
    out.emplace_back(std::move(q), mu);
  }
  return out;
}

LogReal resultant_length_bound(const std::vector<LaurentPoly>& f, const std::vector<LatticeVector>& m0,
                               const std::vector<Rat>& a0) {
  return corollary_bound(MetricSpec::monomial(m0, a0), f);
}

RatInterval length_enclosure(const std::vector<Rat>& coeffs, int bits) {
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& c : coeffs) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  if (num_gcd == 0) throw DomainError("length of the zero vector");
  const Rat content(num_gcd, den_lcm);
  Rat norm = 0;
  for (const auto& c : coeffs) norm += abs(c);
  return log_enclosure(norm / content, bits);
}

}  // namespace arbkk
