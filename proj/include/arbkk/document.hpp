#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "arbkk/concave.hpp"
#include "arbkk/errors.hpp"
#include "arbkk/heights.hpp"

namespace arbkk {

using Json = nlohmann::ordered_json;

/// Well-formed JSON that does not match the document schema; the message
/// starts with a JSON pointer to the offending value.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Problem document:
///   {"n": 2,
///    "polynomials": ["x1 - 3", "x2 - 3"],
///    "polytopes": [[[0,0],[1,0]], ...],                  (mv only)
///    "metric": {"kind": "canonical", "polytope": [[0,0],[1,0],[0,1]]}
///            | {"kind": "monomial", "exponents": [[0,0],[1,0]], "coefficients": ["1","1"]},
///    "cycle": [{"point": ["3","3"], "multiplicity": 1}],
///    "options": {"budget": 64}}
/// Rationals are JSON integers or strings "a" / "a/b".
struct ProblemDocument {
  int n = 0;
  std::vector<LaurentPoly> polynomials;
  std::vector<Polytope> polytopes;
  std::optional<MetricSpec> metric;
  std::optional<ZeroCycle> cycle;
  std::optional<int> budget;
};

/// ParseError on invalid JSON (byte offset), SchemaError on a schema
/// violation, DimensionError on inconsistent dimensions.
ProblemDocument parse_problem(const std::string& text);

Json to_json(const Rat& q);
Rat rat_from_json(const Json& j);

/// {"logs": {"2": "3/2", "5": "-1"}}
Json to_json(const LogReal& x);
LogReal logreal_from_json(const Json& j);

/// {"domain": [...], "lifted": [[x..., value], ...], "unit": "log 3" | "interval"}
Json to_json(const PAConcave& g);
PAConcave paconcave_from_json(const Json& j);

Json to_json(const BoundReport& r);

/// Standard metric data for a dimension: the simplex conv(0, e_1..e_n) for
/// the canonical kind, the l1 data (0, e_1..e_n; 1..1) for the monomial one.
MetricSpec standard_metric(const std::string& kind, int n);

}  // namespace arbkk
