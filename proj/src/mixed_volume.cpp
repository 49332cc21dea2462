#include "arbkk/mixed_volume.hpp"

#include <map>
#include <mutex>

#include "arbkk/errors.hpp"

namespace arbkk {
namespace {

constexpr std::size_t kSumCacheLimit = 20000;

std::mutex g_sum_mutex;
std::map<std::pair<Polytope, Polytope>, Polytope> g_sum_cache;

void check_family(const std::vector<Polytope>& ps) {
  if (ps.empty()) throw DimensionError("mixed volume of no polytopes");
  const int n = static_cast<int>(ps.size());
  check_dimension_cap(n);
  for (const auto& p : ps) {
    if (p.ambient_dim() != n)
      throw DimensionError("mixed volume needs n polytopes in dimension n");
    if (p.is_empty()) throw DomainError("mixed volume of an empty polytope");
  }
}

bool all_lattice(const std::vector<Polytope>& ps) {
  for (const auto& p : ps)
    if (!is_lattice(p)) return false;
  return true;
}

Rat checked(const Rat& mv, const std::vector<Polytope>& ps) {
  if (mv < 0) throw InternalError("negative mixed volume " + to_string(mv));
  if (mv.get_den() != 1 && all_lattice(ps))
    throw InternalError("non-integral mixed volume of lattice polytopes " + to_string(mv));
  return mv;
}

// Unimodular coordinates on the hyperplane u^perp for primitive integer u:
// rows r_1..r_{n-1} of an integer matrix with det +-1 whose first row is u.
std::vector<RatVector> hyperplane_basis(std::vector<Int> w) {
  const std::size_t n = w.size();
  std::vector<std::vector<Int>> inv(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t j = 1; j < n; ++j) {
    while (w[j] != 0) {
      Int q;
      mpz_tdiv_q(q.get_mpz_t(), w[0].get_mpz_t(), w[j].get_mpz_t());
      w[0] -= q * w[j];
      for (std::size_t c = 0; c < n; ++c) inv[j][c] += q * inv[0][c];
      std::swap(w[0], w[j]);
      std::swap(inv[0], inv[j]);
    }
  }
  if (abs(w[0]) != 1) throw InternalError("facet normal is not primitive");
  std::vector<RatVector> rows;
  for (std::size_t r = 1; r < n; ++r) {
    RatVector row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = inv[r][c];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Int> primitive(const RatVector& a) {
  Int l = 1;
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> z(a.size());
  Int g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    z[i] = a[i].get_num() * (l / a[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (g == 0) throw InternalError("zero normal");
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return z;
}

Rat facet_recursion(const std::vector<Polytope>& ps) {
  const int n = static_cast<int>(ps.size());
  if (n == 1) return shadow_length(ps[0], RatVector{Rat(1)});

  Polytope q = ps[1];
  for (int i = 2; i < n; ++i) q = minkowski_sum(q, ps[i]);

  std::vector<std::vector<Int>> normals;  // primitive inner normals
  if (q.affine_dim() == n) {
    for (const auto& [a, b] : q.chart_inequalities()) {
      auto z = primitive(a);
      for (auto& c : z) c = -c;
      normals.push_back(std::move(z));
    }
  } else if (q.affine_dim() == n - 1) {
    auto eqs = q.chart().equations();
    auto z = primitive(eqs.at(0).first);
    normals.push_back(z);
    for (auto& c : z) c = -c;
    normals.push_back(std::move(z));
  } else {
    return 0;
  }

  Rat total = 0;
  for (const auto& z : normals) {
    RatVector u(n);
    for (int i = 0; i < n; ++i) u[i] = z[i];
    Rat psi = support_value(ps[0], u);
    if (psi == 0) continue;
    auto basis = hyperplane_basis(z);
    std::vector<Polytope> faces;
    for (int i = 1; i < n; ++i) {
      Polytope f = face_in_direction(ps[i], u);
      const RatVector& origin = f.vertices()[0];
      std::vector<RatVector> pts;
      for (const auto& v : f.vertices()) {
        RatVector d = sub(v, origin);
        RatVector y(n - 1);
        for (int r = 0; r < n - 1; ++r) y[r] = dot(basis[r], d);
        pts.push_back(std::move(y));
      }
      faces.push_back(convex_hull(pts));
    }
    total -= psi * facet_recursion(faces);
  }
  return total;
}

// Coefficient of t in the Lagrange basis polynomial of node k on 0..n.
Rat lagrange_linear_coeff(int k, int n) {
  RatVector poly{Rat(1)};
  Rat denom = 1;
  for (int j = 0; j <= n; ++j) {
    if (j == k) continue;
    RatVector next(poly.size() + 1, Rat(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * j;
    }
    poly = std::move(next);
    denom *= k - j;
  }
  return poly[1] / denom;
}

}  // namespace

Polytope cached_minkowski_sum(const Polytope& p, const Polytope& q) {
  auto key = p < q ? std::make_pair(p, q) : std::make_pair(q, p);
  {
    std::lock_guard<std::mutex> lock(g_sum_mutex);
    auto it = g_sum_cache.find(key);
    if (it != g_sum_cache.end()) return it->second;
  }
  Polytope sum = minkowski_sum(p, q);
  std::lock_guard<std::mutex> lock(g_sum_mutex);
  if (g_sum_cache.size() >= kSumCacheLimit) g_sum_cache.clear();
  g_sum_cache.emplace(std::move(key), sum);
  return sum;
}

Rat mixed_volume(const std::vector<Polytope>& ps) {
  check_family(ps);
  const int n = static_cast<int>(ps.size());
  const unsigned full = (1u << n) - 1;
  std::vector<Polytope> sums(full + 1, Polytope(n));
  Rat total = 0;
  for (unsigned mask = 1; mask <= full; ++mask) {
    const int low = __builtin_ctz(mask);
    const unsigned rest = mask & (mask - 1);
    sums[mask] = rest == 0 ? ps[low] : cached_minkowski_sum(sums[rest], ps[low]);
    Rat v = volume(sums[mask]);
    if ((n - __builtin_popcount(mask)) % 2 == 0)
      total += v;
    else
      total -= v;
  }
  return checked(total, ps);
}

Rat mixed_volume_facet(const std::vector<Polytope>& ps) {
  check_family(ps);
  return checked(facet_recursion(ps), ps);
}

Rat mixed_volume_interpolation(const std::vector<Polytope>& ps) {
  check_family(ps);
  const int n = static_cast<int>(ps.size());
  std::vector<Rat> coeff(n + 1);
  for (int k = 0; k <= n; ++k) coeff[k] = lagrange_linear_coeff(k, n);

  std::vector<int> lam(n, 0);
  Rat total = 0;
  while (true) {
    Rat weight = 1;
    for (int i = 0; i < n && weight != 0; ++i) weight *= coeff[lam[i]];
    if (weight != 0) {
      Polytope sum = convex_hull(std::vector<RatVector>{zeros(n)});
      for (int i = 0; i < n; ++i)
        if (lam[i] != 0) sum = minkowski_sum(sum, dilate(ps[i], lam[i]));
      total += weight * volume(sum);
    }
    int i = 0;
    while (i < n && lam[i] == n) lam[i++] = 0;
    if (i == n) break;
    ++lam[i];
  }
  return checked(total, ps);
}

Int bkk_degree_bound(const std::vector<LaurentPoly>& system) {
  std::vector<Polytope> ps;
  for (const auto& f : system) {
    if (f.n() != static_cast<int>(system.size()))
      throw DimensionError("system must have n polynomials in n variables");
    ps.push_back(newton_polytope(f));
  }
  Rat mv = mixed_volume(ps);
  return mv.get_num();
}

}  // namespace arbkk
