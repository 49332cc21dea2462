#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arbkk/document.hpp"

namespace arbkk {

/// n polytopes: {"mixed_volume": "4"}; n+1 polytopes: {"complementary": [...]},
/// entry i being the mixed volume with polytope i left out.  The polytopes
/// come from "polytopes" or else from the Newton polytopes of "polynomials".
/// With cross_check every value also carries the facet and interpolation
/// results.
Json run_mv(const ProblemDocument& doc, bool cross_check);

/// Budget precedence: explicit argument, document options, default_budget(n).
int resolve_budget(const ProblemDocument& doc, std::optional<int> budget);

/// The document metric if its kind matches `kind` (or no kind is asked for);
/// otherwise standard_metric(kind or "canonical", n).
MetricSpec resolve_metric(const ProblemDocument& doc, const std::optional<std::string>& kind);

BoundReport run_bound(const ProblemDocument& doc, const std::optional<std::string>& metric, std::optional<int> budget);
BoundReport run_verify(const ProblemDocument& doc, const std::optional<std::string>& metric, std::optional<int> budget);

/// Tower system x_1 - a, x_i - a x_{i-1}^d, with the rational zero
/// (a, a^{d+1}, a^{d^2+d+1}, ...).
std::vector<LaurentPoly> tower_system(int n, int d, long alpha);
TorusPoint tower_point(int n, int d, long alpha);
/// Canonical metric of conv(0, e_1, ..., e_n).
MetricSpec simplex_metric(int n);
/// Canonical metric of conv(0, e_1, e_2 - d e_1, ..., e_n - d e_{n-1}).
MetricSpec twisted_metric(int n, int d);
/// Diagonal system x_i - a with the zero (a, ..., a).
std::vector<LaurentPoly> diagonal_system(int n, long alpha);

struct ExampleGrid {
  std::vector<int> n{1, 2, 3};
  std::vector<int> d{1, 2};
  std::vector<long> alpha{2, 3};
};

/// "n=1,2,3;d=1,2;a=2,3"; missing keys keep their defaults.
ExampleGrid parse_grid(const std::string& text);

struct ExampleRow {
  std::string family;  // "simplex", "twisted" (tower system) or "entropy" (diagonal system)
  int n = 0, d = 0;
  long alpha = 0;
  LogReal expected_height, expected_corollary;
  BoundReport report;
};

/// Every row carries the verification checks plus exact comparisons of the
/// height and the corollary bound with their closed forms; entropy rows also
/// compare the first bound with (n+1) log 2 + log a.
std::vector<ExampleRow> reference_examples(const ExampleGrid& grid, int budget);

Json to_json(const ExampleRow& row);
std::string format_table(const std::vector<ExampleRow>& rows);

}  // namespace arbkk
