// arbkk command-line front end.
//
// Exit codes: 0 ok, 2 parse error, 3 shape error, 4 inconclusive enclosure,
// 5 verification failure, 1 anything else.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "arbkk/commands.hpp"
#include "arbkk/errors.hpp"

namespace {

using arbkk::Json;

enum Exit { kOk = 0, kOther = 1, kParse = 2, kShape = 3, kInconclusive = 4, kVerifyFail = 5 };

struct Output {
  bool json = false;
  bool pretty = false;

  bool structured() const { return json || pretty; }
  void emit(const Json& j) const { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw arbkk::SchemaError(path + ": cannot open input");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int status_exit(arbkk::CheckStatus s) {
  switch (s) {
    case arbkk::CheckStatus::Pass: return kOk;
    case arbkk::CheckStatus::Inconclusive: return kInconclusive;
    case arbkk::CheckStatus::Fail: return kVerifyFail;
  }
  return kOther;
}

void print_mv_entry(const Json& e, const std::string& label) {
  std::cout << label << e["mixed_volume"].get<std::string>();
  if (e.contains("facet"))
    std::cout << "  (facet " << e["facet"].get<std::string>() << ", interpolation "
              << e["interpolation"].get<std::string>() << (e["agree"].get<bool>() ? ", agree)" : ", DISAGREE)");
  std::cout << "\n";
}

void print_report(const arbkk::BoundReport& r) {
  using arbkk::to_string;
  std::cout << "degree bound       " << to_string(r.degree_bound) << "\n";
  std::cout << "theorem1           " << arbkk::interval_string(r.theorem1.enclosure()) << "  (exact part "
            << to_string(r.theorem1.exact) << ", archimedean " << arbkk::interval_string(r.theorem1.archimedean)
            << ", budget " << r.theorem1.budget << ")\n";
  std::cout << "corollary          " << to_string(r.corollary) << "  " << arbkk::interval_string(r.corollary.enclose())
            << "\n";
  if (r.bezout)
    std::cout << "bezout             " << to_string(*r.bezout) << "  " << arbkk::interval_string(r.bezout->enclose())
              << "\n";
  if (r.height) {
    std::cout << "cycle degree       " << *r.cycle_degree << "\n";
    std::cout << "height             " << to_string(*r.height) << "  " << arbkk::interval_string(r.height->enclose())
              << "\n";
  }
  for (const auto& pc : r.theorem1.per_place)
    std::cout << "  place " << to_string(pc.place) << "  "
              << (pc.enclosure ? arbkk::interval_string(*pc.enclosure) : to_string(pc.exact)) << "\n";
  for (const auto& c : r.checks)
    std::cout << "check " << c.name << "  " << to_string(c.status) << "  slack " << c.slack << "\n";
  std::cout << "status             " << to_string(r.status()) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mixed volumes and arithmetic height bounds for Laurent systems over Q"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  app.add_flag("--json", out.json, "Compact JSON output");
  app.add_flag("--pretty", out.pretty, "Indented JSON output");

  std::string input = "-";
  bool cross_check = false;
  std::optional<std::string> metric;
  std::optional<int> budget;
  std::string grid;
  int example_budget = 8;

  auto* mv = app.add_subcommand("mv", "Mixed volume of n polytopes, or the n+1 complementary ones");
  mv->add_option("input", input, "Problem document path, - for stdin");
  mv->add_flag("--cross-check", cross_check, "Also run the facet recursion and the interpolation method");

  auto* bound = app.add_subcommand("bound", "Degree bound and the three height bounds");
  bound->add_option("input", input, "Problem document path, - for stdin");
  bound->add_option("--metric", metric, "canonical or monomial")->check(CLI::IsMember({"canonical", "monomial"}));
  bound->add_option("--budget", budget, "Dual samples per Archimedean roof")->check(CLI::NonNegativeNumber);

  auto* ver = app.add_subcommand("verify", "Check a zero cycle against the bounds");
  ver->add_option("input", input, "Problem document path, - for stdin");
  ver->add_option("--metric", metric, "canonical or monomial")->check(CLI::IsMember({"canonical", "monomial"}));
  ver->add_option("--budget", budget, "Dual samples per Archimedean roof")->check(CLI::NonNegativeNumber);

  auto* ex = app.add_subcommand("paper-examples", "Reproduce the tower and entropy example families");
  ex->add_option("--grid", grid, "Grid such as \"n=1,2,3;d=1,2;a=2,3\"");
  ex->add_option("--budget", example_budget, "Dual samples per Archimedean roof")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*mv) {
      const auto doc = arbkk::parse_problem(read_input(input));
      const Json result = arbkk::run_mv(doc, cross_check);
      if (out.structured()) {
        out.emit(result);
      } else if (result.contains("complementary")) {
        int i = 0;
        for (const auto& e : result["complementary"]) print_mv_entry(e, "without " + std::to_string(i++) + ": ");
      } else {
        print_mv_entry(result, "mixed volume: ");
      }
      return kOk;
    }
    if (*bound || *ver) {
      const auto doc = arbkk::parse_problem(read_input(input));
      const auto report = *bound ? arbkk::run_bound(doc, metric, budget) : arbkk::run_verify(doc, metric, budget);
      if (out.structured())
        out.emit(arbkk::to_json(report));
      else
        print_report(report);
      return status_exit(report.status());
    }
    if (*ex) {
      const auto rows = arbkk::reference_examples(arbkk::parse_grid(grid), example_budget);
      arbkk::CheckStatus worst = arbkk::CheckStatus::Pass;
      Json list = Json::array();
      for (const auto& r : rows) {
        list.push_back(arbkk::to_json(r));
        if (r.report.status() == arbkk::CheckStatus::Fail) worst = arbkk::CheckStatus::Fail;
        if (r.report.status() == arbkk::CheckStatus::Inconclusive && worst == arbkk::CheckStatus::Pass)
          worst = arbkk::CheckStatus::Inconclusive;
      }
      if (out.structured())
        out.emit(list);
      else
        std::cout << arbkk::format_table(rows);
      return status_exit(worst);
    }
  } catch (const arbkk::ResidualError& e) {
    std::cerr << "verification failed: " << e.what() << " (polynomial index " << e.index() << ")\n";
    return kVerifyFail;
  } catch (const arbkk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const arbkk::SchemaError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const arbkk::DimensionError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kShape;
  } catch (const arbkk::DomainError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kShape;
  } catch (const arbkk::PrecisionError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
