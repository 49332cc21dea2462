#include <string>

#include "doctest.h"
#include "oracles.hpp"

#include "arbkk/commands.hpp"
#include "arbkk/document.hpp"
#include "arbkk/errors.hpp"

using namespace arbkk;
using oracle::Gen;

namespace {

std::string schema_message(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("a full problem document") {
  auto doc = parse_problem(R"({
    "n": 2,
    "polynomials": ["x1 - 3", "x2 - 3"],
    "metric": {"kind": "monomial", "exponents": [[0,0],[1,0],[0,1]], "coefficients": ["1", 1, "1/2"]},
    "cycle": [{"point": ["3", 3], "multiplicity": 1}],
    "options": {"budget": 5}
  })");
  CHECK(doc.n == 2);
  CHECK(doc.polynomials.size() == 2);
  REQUIRE(doc.metric);
  CHECK_FALSE(doc.metric->is_canonical());
  CHECK(doc.metric->coefficients() == std::vector<Rat>{1, 1, Rat(1, 2)});
  REQUIRE(doc.cycle);
  CHECK(doc.cycle->degree() == 1);
  CHECK(doc.budget == 5);
  CHECK(resolve_budget(doc, std::nullopt) == 5);
  CHECK(resolve_budget(doc, 3) == 3);
  CHECK(resolve_metric(doc, std::nullopt).kind() == MetricSpec::Kind::Monomial);
  CHECK(resolve_metric(doc, std::string("canonical")).polytope() == standard_simplex(2));
}

TEST_CASE("defaults") {
  auto doc = parse_problem(R"({"n": 3, "polynomials": ["x1", "x2", "x3"], "metric": {"kind": "canonical"}})");
  CHECK(doc.metric->polytope() == standard_simplex(3));
  CHECK(resolve_budget(doc, std::nullopt) == default_budget(3));
  CHECK_FALSE(doc.cycle);
}

TEST_CASE("JSON syntax errors carry a location") {
  try {
    parse_problem("{\"n\": 2,, }");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 8);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}

TEST_CASE("schema errors name the offending value") {
  CHECK(schema_message("[]").rfind(":", 0) == 0);
  CHECK(schema_message(R"({"polynomials": []})").find("\"n\"") != std::string::npos);
  CHECK(schema_message(R"({"n": 0})").rfind("/n:", 0) == 0);
  CHECK(schema_message(R"({"n": 1, "polynomials": ["x1 +"]})").rfind("/polynomials/0:", 0) == 0);
  CHECK(schema_message(R"({"n": 1, "metric": {"kind": "round"}})").rfind("/metric/kind:", 0) == 0);
  CHECK(schema_message(R"({"n": 1, "cycle": [{"point": [0]}]})").rfind("/cycle:", 0) == 0);
  CHECK(schema_message(R"({"n": 1, "options": {"budget": -1}})").rfind("/options/budget:", 0) == 0);
  CHECK(schema_message(R"({"n": 1, "polytopes": [[[0.5]]]})").rfind("/polytopes/0", 0) == 0);
}

TEST_CASE("dimension mismatches") {
  CHECK_THROWS_AS(parse_problem(R"({"n": 2, "polytopes": [[[0,0,0]]]})"), DimensionError);
  CHECK_THROWS_AS(parse_problem(R"({"n": 2, "cycle": [{"point": [1]}]})"), DimensionError);
  auto doc = parse_problem(R"({"n": 2, "polytopes": [[[0,0],[1,0]]]})");
  CHECK_THROWS_AS(run_mv(doc, false), DimensionError);
}

TEST_CASE("rationals and LogReals round-trip") {
  Gen g(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Rat q = g.rational(-100, 100, 50);
    CHECK(rat_from_json(to_json(q)) == q);
    const LogReal x = g.rational(-5, 5, 7) * LogReal::log_of(g.nonzero_rational(1, 100, 30)) +
                      g.rational(-5, 5, 7) * LogReal::log_of(g.nonzero_rational(1, 100, 30));
    CHECK(logreal_from_json(to_json(x)) == x);
  }
  CHECK(to_json(Rat(-3, 4)) == Json("-3/4"));
  CHECK(to_json(Rat(7) * LogReal::log_of(2)).dump() == R"({"logs":{"2":"7"}})");
  CHECK_THROWS_AS(logreal_from_json(Json::parse(R"({"logs":{"4":"1"}})")), SchemaError);
  CHECK_THROWS_AS(rat_from_json(Json("1/0")), DomainError);
  CHECK(schema_message(R"({"n": 1, "cycle": [{"point": ["1/0"]}]})").rfind("/cycle/0/point/0:", 0) == 0);
}

TEST_CASE("piecewise-affine functions round-trip") {
  Gen g(72);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<LiftedPoint> pts;
    for (int k = 0; k < 5; ++k) pts.emplace_back(oracle::rat(g.lattice(2, 0, 3)), g.rational(-3, 3, 4));
    auto f = PAConcave::from_points(pts, trial % 2 ? Unit::real() : Unit::log_prime(5));
    auto h = paconcave_from_json(to_json(f));
    CHECK(h.lifted() == f.lifted());
    CHECK(h.domain() == f.domain());
    CHECK(h.unit() == f.unit());
  }
}

TEST_CASE("mixed volume documents") {
  auto cube = parse_problem(R"({"n": 3, "polytopes": [[[0,0,0],[1,0,0]], [[0,0,0],[0,1,0]], [[0,0,0],[0,0,1]]]})");
  CHECK(run_mv(cube, false).dump() == R"({"mixed_volume":"1"})");
  auto tower = parse_problem(R"({"n": 3, "polytopes": [
      [[0,0,0],[1,0,0],[0,1,0],[0,0,1]], [[0,0,0],[1,0,0]], [[2,0,0],[0,1,0]], [[0,2,0],[0,0,1]]]})");
  auto out = run_mv(tower, true);
  REQUIRE(out["complementary"].size() == 4);
  const char* want[] = {"1", "4", "2", "1"};
  for (int i = 0; i < 4; ++i) {
    CHECK(out["complementary"][i]["mixed_volume"] == want[i]);
    CHECK(out["complementary"][i]["agree"] == true);
  }
  auto polys = parse_problem(R"({"n": 2, "polynomials": ["x1^2 + x2 - 1", "x1 - x2^3"]})");
  CHECK(run_mv(polys, false)["mixed_volume"] == "6");
}

TEST_CASE("reports serialize deterministically") {
  auto doc = parse_problem(R"({"n": 1, "polynomials": ["x1 - 5"], "cycle": [{"point": ["5"]}]})");
  const std::string a = to_json(run_verify(doc, std::nullopt, 4)).dump();
  const std::string b = to_json(run_verify(doc, std::nullopt, 4)).dump();
  CHECK(a == b);
  auto j = Json::parse(a);
  CHECK(j["status"] == "pass");
  CHECK(j["height"]["logs"]["5"] == "1");
  CHECK(j["corollary"]["text"] == "log(2) + log(3)");
  CHECK(j["theorem1"]["total"][0].get<std::string>().size() > 0);
}

TEST_CASE("grids") {
  auto g = parse_grid("n=1,2;d=2;a=3");
  CHECK(g.n == std::vector<int>{1, 2});
  CHECK(g.d == std::vector<int>{2});
  CHECK(g.alpha == std::vector<long>{3});
  auto dflt = parse_grid("");
  CHECK(dflt.n == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(parse_grid("n=1;q=2"), ParseError);
  CHECK_THROWS_AS(parse_grid("n=x"), ParseError);
  CHECK_THROWS_AS(parse_grid("n=9"), DomainError);
}

TEST_CASE("reference example rows in low dimension") {
  auto rows = reference_examples(parse_grid("n=1,2;d=1,2;a=2,3"), 8);
  CHECK(rows.size() == 2 * (2 * 2 * 2 + 2));
  for (const auto& r : rows) {
    INFO(r.family << " n=" << r.n << " d=" << r.d << " a=" << r.alpha);
    CHECK(r.report.status() == CheckStatus::Pass);
    CHECK(*r.report.height == r.expected_height);
  }
  const std::string table = format_table(rows);
  CHECK(table.find("entropy") != std::string::npos);
  CHECK(table.find("twisted") != std::string::npos);
}
