#include "arbkk/commands.hpp"

#include <algorithm>
#include <sstream>

#include "arbkk/errors.hpp"
#include "arbkk/mixed_volume.hpp"

namespace arbkk {
namespace {

Json mv_entry(const std::vector<Polytope>& ps, bool cross_check) {
  const Rat mv = mixed_volume(ps);
  Json out{{"mixed_volume", to_string(mv)}};
  if (cross_check) {
    const Rat facet = mixed_volume_facet(ps);
    const Rat interp = mixed_volume_interpolation(ps);
    out["facet"] = to_string(facet);
    out["interpolation"] = to_string(interp);
    out["agree"] = facet == mv && interp == mv;
  }
  return out;
}

LatticeVector unit(int n, int i) {
  LatticeVector e(n, 0);
  e[i] = 1;
  return e;
}

Check exact_equal(const std::string& name, const LogReal& got, const LogReal& want) {
  return {name, got == want ? CheckStatus::Pass : CheckStatus::Fail, to_string(want - got)};
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

}  // namespace

Json run_mv(const ProblemDocument& doc, bool cross_check) {
  std::vector<Polytope> ps = doc.polytopes;
  if (ps.empty())
    for (const auto& f : doc.polynomials) {
      if (f.is_zero()) throw DomainError("zero polynomial has no Newton polytope");
      ps.push_back(newton_polytope(f));
    }
  if (ps.empty()) throw SchemaError("/: document has neither polytopes nor polynomials");
  const int n = doc.n;
  if (static_cast<int>(ps.size()) == n) return mv_entry(ps, cross_check);
  if (static_cast<int>(ps.size()) != n + 1)
    throw DimensionError("expected n or n+1 polytopes, got " + std::to_string(ps.size()));
  Json list = Json::array();
  for (int i = 0; i <= n; ++i) {
    std::vector<Polytope> family;
    for (int j = 0; j <= n; ++j)
      if (j != i) family.push_back(ps[j]);
    list.push_back(mv_entry(family, cross_check));
  }
  return Json{{"complementary", list}};
}

int resolve_budget(const ProblemDocument& doc, std::optional<int> budget) {
  if (budget) {
    if (*budget < 0) throw DomainError("negative budget");
    return *budget;
  }
  if (doc.budget) return *doc.budget;
  return default_budget(doc.n);
}

MetricSpec resolve_metric(const ProblemDocument& doc, const std::optional<std::string>& kind) {
  if (kind && *kind != "canonical" && *kind != "monomial") throw DomainError("unknown metric kind " + *kind);
  if (doc.metric) {
    const std::string have = doc.metric->is_canonical() ? "canonical" : "monomial";
    if (!kind || *kind == have) return *doc.metric;
  }
  return standard_metric(kind.value_or("canonical"), doc.n);
}

BoundReport run_bound(const ProblemDocument& doc, const std::optional<std::string>& metric, std::optional<int> budget) {
  return bound_report(resolve_metric(doc, metric), doc.polynomials, resolve_budget(doc, budget));
}

BoundReport run_verify(const ProblemDocument& doc, const std::optional<std::string>& metric, std::optional<int> budget) {
  if (!doc.cycle) throw SchemaError("/cycle: verification needs a cycle");
  return verify(doc.polynomials, resolve_metric(doc, metric), *doc.cycle, resolve_budget(doc, budget));
}

std::vector<LaurentPoly> tower_system(int n, int d, long alpha) {
  if (n < 1 || d < 0) throw DomainError("tower system needs n >= 1 and d >= 0");
  std::vector<LaurentPoly> f;
  for (int i = 0; i < n; ++i) {
    LatticeVector m(n, 0);
    if (i > 0) m[i - 1] = d;
    f.push_back(LaurentPoly::monomial(unit(n, i), 1) - LaurentPoly::monomial(m, Rat(alpha)));
  }
  return f;
}

TorusPoint tower_point(int n, int d, long alpha) {
  TorusPoint p(n);
  Int v = alpha;
  for (int i = 0; i < n; ++i) {
    p[i] = Rat(v);
    Int next;
    mpz_pow_ui(next.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(d));
    v = next * alpha;
  }
  return p;
}

MetricSpec simplex_metric(int n) { return MetricSpec::canonical(standard_simplex(n)); }

MetricSpec twisted_metric(int n, int d) {
  std::vector<LatticeVector> m{LatticeVector(n, 0), unit(n, 0)};
  for (int i = 1; i < n; ++i) {
    LatticeVector e = unit(n, i);
    e[i - 1] = -d;
    m.push_back(e);
  }
  return MetricSpec::canonical(convex_hull(m));
}

std::vector<LaurentPoly> diagonal_system(int n, long alpha) {
  std::vector<LaurentPoly> f;
  for (int i = 0; i < n; ++i) f.push_back(LaurentPoly::monomial(unit(n, i), 1) - LaurentPoly::constant(n, Rat(alpha)));
  return f;
}

ExampleGrid parse_grid(const std::string& text) {
  ExampleGrid g;
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("grid entry without '='", 0);
    const std::string key = part.substr(0, eq);
    std::vector<long> values;
    std::stringstream items(part.substr(eq + 1));
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stol(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ParseError("bad grid value \"" + item + "\"", 0);
      }
    }
    if (values.empty()) throw ParseError("empty grid entry " + key, 0);
    if (key == "n") {
      g.n.assign(values.begin(), values.end());
      for (auto v : values)
        if (v < 1 || v > dimension_cap()) throw DomainError("grid dimension outside [1, cap]");
    } else if (key == "d") {
      g.d.assign(values.begin(), values.end());
      for (auto v : values)
        if (v < 0) throw DomainError("negative grid exponent");
    } else if (key == "a" || key == "alpha") {
      g.alpha = values;
      for (auto v : values)
        if (v < 1) throw DomainError("grid coefficients must be positive");
    } else {
      throw ParseError("unknown grid key " + key, 0);
    }
  }
  return g;
}

std::vector<ExampleRow> reference_examples(const ExampleGrid& grid, int budget) {
  std::vector<ExampleRow> rows;
  for (int n : grid.n) {
    for (int d : grid.d)
      for (long a : grid.alpha) {
        const auto f = tower_system(n, d, a);
        const ZeroCycle z({{tower_point(n, d, a), 1}});
        const LogReal la = LogReal::log_of(Rat(a)), la1 = LogReal::log_of(Rat(a + 1));
        Rat geometric = 0, power = 1;
        for (int i = 0; i < n; ++i) {
          geometric += power;
          power *= d;
        }
        rows.push_back({"simplex", n, d, a, geometric * la, geometric * la1, verify(f, simplex_metric(n), z, budget)});
        rows.push_back({"twisted", n, d, a, la, Rat(n) * la1, verify(f, twisted_metric(n, d), z, budget)});
      }
    for (long a : grid.alpha) {
      const LogReal la = LogReal::log_of(Rat(a)), la1 = LogReal::log_of(Rat(a + 1));
      const ZeroCycle z({{TorusPoint(n, Rat(a)), 1}});
      rows.push_back({"entropy", n, 0, a, la, Rat(n) * la1, verify(diagonal_system(n, a), simplex_metric(n), z, budget)});
    }
  }
  for (auto& row : rows) {
    auto& checks = row.report.checks;
    checks.push_back(exact_equal("height_formula", *row.report.height, row.expected_height));
    checks.push_back(exact_equal("corollary_formula", row.report.corollary, row.expected_corollary));
    if (row.family == "entropy") {
      const LogReal target = Rat(row.n + 1) * LogReal::log_of(2) + LogReal::log_of(Rat(row.alpha));
      const RatInterval t = row.report.theorem1.enclosure(), goal = target.enclose();
      const bool ok = t.hi <= goal.lo + Rat(1, 1000000);
      checks.push_back({"theorem1_le_entropy_target", ok ? CheckStatus::Pass : CheckStatus::Fail,
                        interval_string({goal.lo - t.hi, goal.hi - t.lo})});
    }
  }
  return rows;
}

Json to_json(const ExampleRow& row) {
  Json j{{"family", row.family}, {"n", row.n}, {"d", row.d}, {"alpha", row.alpha}};
  j["expected_height"] = to_json(row.expected_height);
  j["expected_corollary"] = to_json(row.expected_corollary);
  j["report"] = to_json(row.report);
  return j;
}

std::string format_table(const std::vector<ExampleRow>& rows) {
  std::ostringstream out;
  out << pad("family", 9) << pad("n", 3) << pad("d", 3) << pad("a", 4) << pad("height", 14) << pad("corollary", 14)
      << pad("theorem1", 34) << "status\n";
  for (const auto& r : rows) {
    out << pad(r.family, 9) << pad(std::to_string(r.n), 3) << pad(r.family == "entropy" ? "-" : std::to_string(r.d), 3)
        << pad(std::to_string(r.alpha), 4) << pad(to_string(*r.report.height), 14) << pad(to_string(r.report.corollary), 14)
        << pad(interval_string(r.report.theorem1.enclosure()), 34) << to_string(r.report.status()) << "\n";
  }
  return out.str();
}

}  // namespace arbkk
