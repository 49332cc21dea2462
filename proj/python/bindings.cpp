#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arbkk/commands.hpp"
#include "arbkk/errors.hpp"
#include "arbkk/mixed_volume.hpp"
#include "arbkk/places.hpp"

namespace py = pybind11;

namespace {

std::vector<arbkk::Polytope> polytopes_from(const std::vector<std::vector<std::vector<std::string>>>& data) {
  std::vector<arbkk::Polytope> out;
  for (const auto& verts : data) {
    std::vector<arbkk::RatVector> pts;
    for (const auto& v : verts) {
      arbkk::RatVector x;
      for (const auto& c : v) x.push_back(arbkk::parse_rat(c));
      pts.push_back(std::move(x));
    }
    out.push_back(arbkk::convex_hull(pts));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact mixed volumes and arithmetic height bounds (native core)";

  // Translators registered later are tried first, so the base class goes first.
  auto base = py::register_exception<arbkk::Error>(m, "Error");
  py::register_exception<arbkk::ParseError>(m, "ParseError", base);
  py::register_exception<arbkk::SchemaError>(m, "SchemaError", base);
  py::register_exception<arbkk::DimensionError>(m, "DimensionError", base);
  py::register_exception<arbkk::DomainError>(m, "DomainError", base);
  py::register_exception<arbkk::ResidualError>(m, "ResidualError", base);
  py::register_exception<arbkk::PrecisionError>(m, "PrecisionError", base);

  m.def(
      "parse_laurent",
      [](const std::string& text, int n) { return arbkk::to_string(arbkk::parse_laurent(text, n)); },
      py::arg("text"), py::arg("n"), "Canonical form of a Laurent polynomial in x1..xn.");

  m.def(
      "mixed_volume",
      [](const std::vector<std::vector<std::vector<std::string>>>& polytopes, const std::string& method) {
        const auto ps = polytopes_from(polytopes);
        py::gil_scoped_release release;
        if (method == "facet") return arbkk::to_string(arbkk::mixed_volume_facet(ps));
        if (method == "interpolation") return arbkk::to_string(arbkk::mixed_volume_interpolation(ps));
        if (method != "sum") throw arbkk::DomainError("unknown method " + method);
        return arbkk::to_string(arbkk::mixed_volume(ps));
      },
      py::arg("polytopes"), py::arg("method") = "sum",
      "Mixed volume of n polytopes given as vertex lists of rational strings.");

  m.def(
      "length",
      [](const std::vector<std::string>& coeffs) {
        std::vector<arbkk::Rat> c;
        for (const auto& s : coeffs) c.push_back(arbkk::parse_rat(s));
        return arbkk::to_json(arbkk::length(c)).dump();
      },
      py::arg("coefficients"), "Logarithmic length of a coefficient vector as LogReal JSON.");

  m.def(
      "mv",
      [](const std::string& document, bool cross_check) {
        const auto doc = arbkk::parse_problem(document);
        py::gil_scoped_release release;
        return arbkk::run_mv(doc, cross_check).dump();
      },
      py::arg("document"), py::arg("cross_check") = false);

  m.def(
      "bound",
      [](const std::string& document, std::optional<std::string> metric, std::optional<int> budget) {
        const auto doc = arbkk::parse_problem(document);
        py::gil_scoped_release release;
        return arbkk::to_json(arbkk::run_bound(doc, metric, budget)).dump();
      },
      py::arg("document"), py::arg("metric") = py::none(), py::arg("budget") = py::none());

  m.def(
      "verify",
      [](const std::string& document, std::optional<std::string> metric, std::optional<int> budget) {
        const auto doc = arbkk::parse_problem(document);
        py::gil_scoped_release release;
        return arbkk::to_json(arbkk::run_verify(doc, metric, budget)).dump();
      },
      py::arg("document"), py::arg("metric") = py::none(), py::arg("budget") = py::none());

  m.def(
      "reference_examples",
      [](const std::string& grid, int budget) {
        const auto g = arbkk::parse_grid(grid);
        py::gil_scoped_release release;
        arbkk::Json list = arbkk::Json::array();
        for (const auto& row : arbkk::reference_examples(g, budget)) list.push_back(arbkk::to_json(row));
        return list.dump();
      },
      py::arg("grid") = "", py::arg("budget") = 8);
}
