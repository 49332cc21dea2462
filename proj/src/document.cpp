#include "arbkk/document.hpp"

#include "arbkk/errors.hpp"
#include "arbkk/factor.hpp"

namespace arbkk {
namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) { throw SchemaError(where + ": " + what); }

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(where, "missing field \"" + key + "\"");
  return *it;
}

Rat rat_at(const Json& j, const std::string& where) {
  try {
    return rat_from_json(j);
  } catch (const Error& e) {
    schema(where, e.what());
  }
}

RatVector vector_at(const Json& j, const std::string& where, int n) {
  if (!j.is_array()) schema(where, "expected an array of rationals");
  if (static_cast<int>(j.size()) != n)
    throw DimensionError(where + ": expected " + std::to_string(n) + " coordinates, got " + std::to_string(j.size()));
  RatVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rat_at(j[i], where + "/" + std::to_string(i)));
  return out;
}

LatticeVector lattice_at(const Json& j, const std::string& where, int n) {
  RatVector v = vector_at(j, where, n);
  LatticeVector out;
  for (const auto& c : v) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) schema(where, "expected integer coordinates");
    out.push_back(c.get_num().get_si());
  }
  return out;
}

std::vector<RatVector> points_at(const Json& j, const std::string& where, int n) {
  if (!j.is_array() || j.empty()) schema(where, "expected a non-empty array of points");
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector_at(j[i], where + "/" + std::to_string(i), n));
  return out;
}

MetricSpec metric_at(const Json& j, int n) {
  if (!j.is_object()) schema("/metric", "expected an object");
  const Json& kind = field(j, "kind", "/metric");
  if (!kind.is_string()) schema("/metric/kind", "expected a string");
  try {
    if (kind == "canonical") {
      if (!j.contains("polytope")) return standard_metric("canonical", n);
      return MetricSpec::canonical(convex_hull(points_at(j["polytope"], "/metric/polytope", n)));
    }
    if (kind == "monomial") {
      const Json& ex = field(j, "exponents", "/metric");
      const Json& co = field(j, "coefficients", "/metric");
      if (!ex.is_array() || !co.is_array()) schema("/metric", "exponents and coefficients must be arrays");
      std::vector<LatticeVector> m;
      std::vector<Rat> a;
      for (std::size_t i = 0; i < ex.size(); ++i) m.push_back(lattice_at(ex[i], "/metric/exponents/" + std::to_string(i), n));
      for (std::size_t i = 0; i < co.size(); ++i) a.push_back(rat_at(co[i], "/metric/coefficients/" + std::to_string(i)));
      if (m.size() != a.size()) throw DimensionError("/metric: exponent and coefficient counts differ");
      return MetricSpec::monomial(std::move(m), std::move(a));
    }
  } catch (const DomainError& e) {
    schema("/metric", e.what());
  }
  schema("/metric/kind", "expected \"canonical\" or \"monomial\"");
}

}  // namespace

Json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Rat(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Rat(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw DomainError("expected an integer or a rational string");
}

Json to_json(const LogReal& x) {
  Json logs = Json::object();
  for (const auto& [p, c] : x.coeffs()) logs[to_string(p)] = to_string(c);
  return Json{{"logs", logs}};
}

LogReal logreal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("logs") || !j["logs"].is_object()) schema("", "expected {\"logs\": {...}}");
  LogReal out;
  for (const auto& [key, value] : j["logs"].items()) {
    Int p;
    if (p.set_str(key, 10) != 0 || p < 2) schema("/logs/" + key, "expected a prime key");
    if (!is_prime(p)) schema("/logs/" + key, "not a prime");
    out += LogReal::log_prime(p, rat_at(value, "/logs/" + key));
  }
  return out;
}

Json to_json(const PAConcave& g) {
  Json dom = Json::array(), lifted = Json::array();
  for (const auto& v : g.domain().vertices()) {
    Json row = Json::array();
    for (const auto& c : v) row.push_back(to_json(c));
    dom.push_back(row);
  }
  for (const auto& [x, t] : g.lifted()) {
    Json row = Json::array();
    for (const auto& c : x) row.push_back(to_json(c));
    row.push_back(to_json(t));
    lifted.push_back(row);
  }
  return Json{{"domain", dom}, {"lifted", lifted}, {"unit", to_string(g.unit())}};
}

PAConcave paconcave_from_json(const Json& j) {
  if (!j.is_object()) schema("", "expected an object");
  const Json& lifted = field(j, "lifted", "");
  if (!lifted.is_array() || lifted.empty() || !lifted[0].is_array() || lifted[0].empty())
    schema("/lifted", "expected a non-empty array of [x..., value] rows");
  const int n = static_cast<int>(lifted[0].size()) - 1;
  std::vector<LiftedPoint> pts;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    const std::string where = "/lifted/" + std::to_string(i);
    if (!lifted[i].is_array() || static_cast<int>(lifted[i].size()) != n + 1)
      throw DimensionError(where + ": row length differs");
    RatVector x;
    for (int k = 0; k < n; ++k) x.push_back(rat_at(lifted[i][k], where));
    pts.emplace_back(std::move(x), rat_at(lifted[i][n], where));
  }
  Unit unit = Unit::real();
  if (j.contains("unit")) {
    const Json& u = j["unit"];
    if (!u.is_string()) schema("/unit", "expected a string");
    const std::string s = u.get<std::string>();
    if (s.rfind("log ", 0) == 0) {
      Int p;
      if (p.set_str(s.substr(4), 10) != 0) schema("/unit", "bad prime");
      unit = Unit::log_prime(p);
    } else if (s != "interval") {
      schema("/unit", "expected \"interval\" or \"log p\"");
    }
  }
  if (j.contains("domain")) return PAConcave::from_points(pts, convex_hull(points_at(j["domain"], "/domain", n)), unit);
  return PAConcave::from_points(pts, unit);
}

ProblemDocument parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!j.is_object()) schema("", "expected a JSON object");
  ProblemDocument doc;
  const Json& n = field(j, "n", "");
  if (!n.is_number_integer() || n.get<long long>() < 1) schema("/n", "expected a positive integer");
  doc.n = static_cast<int>(n.get<long long>());

  if (j.contains("polynomials")) {
    const Json& ps = j["polynomials"];
    if (!ps.is_array()) schema("/polynomials", "expected an array of strings");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const std::string where = "/polynomials/" + std::to_string(i);
      if (!ps[i].is_string()) schema(where, "expected a string");
      try {
        doc.polynomials.push_back(parse_laurent(ps[i].get<std::string>(), doc.n));
      } catch (const ParseError& e) {
        schema(where, e.what());
      } catch (const DomainError& e) {
        schema(where, e.what());
      }
    }
  }
  if (j.contains("polytopes")) {
    const Json& ps = j["polytopes"];
    if (!ps.is_array()) schema("/polytopes", "expected an array of vertex arrays");
    for (std::size_t i = 0; i < ps.size(); ++i)
      doc.polytopes.push_back(convex_hull(points_at(ps[i], "/polytopes/" + std::to_string(i), doc.n)));
  }
  if (j.contains("metric")) doc.metric = metric_at(j["metric"], doc.n);
  if (j.contains("cycle")) {
    const Json& cy = j["cycle"];
    if (!cy.is_array()) schema("/cycle", "expected an array");
    std::vector<std::pair<TorusPoint, long>> pts;
    for (std::size_t i = 0; i < cy.size(); ++i) {
      const std::string where = "/cycle/" + std::to_string(i);
      if (!cy[i].is_object()) schema(where, "expected an object");
      RatVector x = vector_at(field(cy[i], "point", where), where + "/point", doc.n);
      long mu = 1;
      if (cy[i].contains("multiplicity")) {
        const Json& m = cy[i]["multiplicity"];
        if (!m.is_number_integer()) schema(where + "/multiplicity", "expected an integer");
        mu = m.get<long>();
      }
      pts.emplace_back(std::move(x), mu);
    }
    try {
      doc.cycle = ZeroCycle(std::move(pts));
    } catch (const DomainError& e) {
      schema("/cycle", e.what());
    }
  }
  if (j.contains("options")) {
    const Json& o = j["options"];
    if (!o.is_object()) schema("/options", "expected an object");
    if (o.contains("budget")) {
      if (!o["budget"].is_number_integer() || o["budget"].get<long long>() < 0)
        schema("/options/budget", "expected a non-negative integer");
      doc.budget = static_cast<int>(o["budget"].get<long long>());
    }
  }
  return doc;
}

Json to_json(const BoundReport& r) {
  auto with_interval = [](const LogReal& x) {
    Json j = to_json(x);
    j["text"] = to_string(x);
    j["interval"] = interval_string(x.enclose());
    return j;
  };
  Json out;
  out["degree_bound"] = r.degree_bound.fits_slong_p() ? Json(r.degree_bound.get_si()) : Json(to_string(r.degree_bound));
  const RatInterval total = r.theorem1.enclosure();
  out["theorem1"] = {{"exact", to_json(r.theorem1.exact)},
                     {"interval", {decimal_down(r.theorem1.archimedean.lo), decimal_up(r.theorem1.archimedean.hi)}},
                     {"total", {decimal_down(total.lo), decimal_up(total.hi)}},
                     {"budget", r.theorem1.budget}};
  out["corollary"] = with_interval(r.corollary);
  out["bezout"] = r.bezout ? with_interval(*r.bezout) : Json(nullptr);
  if (r.cycle_degree) out["cycle_degree"] = *r.cycle_degree;
  if (r.height) out["height"] = with_interval(*r.height);
  Json places = Json::array();
  for (const auto& pc : r.theorem1.per_place) {
    Json row{{"place", to_string(pc.place)}};
    if (pc.enclosure)
      row["interval"] = {decimal_down(pc.enclosure->lo), decimal_up(pc.enclosure->hi)};
    else
      row["exact"] = to_json(pc.exact);
    places.push_back(row);
  }
  out["per_place"] = places;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"slack", c.slack}});
  out["checks"] = checks;
  out["status"] = to_string(r.status());
  return out;
}

MetricSpec standard_metric(const std::string& kind, int n) {
  std::vector<LatticeVector> m{LatticeVector(n, 0)};
  for (int i = 0; i < n; ++i) {
    LatticeVector e(n, 0);
    e[i] = 1;
    m.push_back(e);
  }
  if (kind == "canonical") return MetricSpec::canonical(convex_hull(m));
  if (kind == "monomial") return MetricSpec::monomial(m, std::vector<Rat>(m.size(), Rat(1)));
  throw DomainError("unknown metric kind " + kind);
}

}  // namespace arbkk
