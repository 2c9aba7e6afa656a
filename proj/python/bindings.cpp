#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "u3groups/catalog.hpp"
#include "u3groups/report.hpp"
#include "u3groups/series_lab.hpp"

namespace py = pybind11;
using namespace u3g;

namespace {

struct GroupHandle {
  GroupPtr ptr;
  const FiniteMatrixGroup& g() const { return *ptr; }
};

ToleranceConfig tolerance(double tol) {
  ToleranceConfig cfg;
  cfg.eq_tol = tol;
  cfg.validate();
  return cfg;
}

GroupHandle build(const std::vector<std::string>& exprs, double tol, std::size_t max_order) {
  return {generate_group(parse_generators(exprs), tolerance(tol), max_order)};
}

CharacterTable table_of(const GroupPtr& g) {
  const Representation seed = defining_rep(g);
  return discover_irreducibles(g, std::span<const Representation>(&seed, 1));
}

Representation select(const std::string& which, const GroupPtr& g, const CharacterTable& t) {
  if (which == "def") return defining_rep(g);
  if (which == "conj") return conjugate_rep(defining_rep(g));
  const std::size_t idx = std::stoul(which);
  if (idx >= t.size() || !t.realizations[idx]) throw py::index_error("no realized irreducible " + which);
  return *t.realizations[idx];
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite subgroups of U(3): closure, invariants, character tables and series";

  py::register_exception<GroupNotClosed>(m, "GroupNotClosed", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IncompleteTable>(m, "IncompleteTable", PyExc_RuntimeError);
  py::register_exception<NoSuchSeriesMember>(m, "NoSuchSeriesMember", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);

  py::class_<GroupHandle>(m, "Group")
      .def_property_readonly("order", [](const GroupHandle& h) { return h.g().order(); })
      .def_property_readonly("dim", [](const GroupHandle& h) { return h.g().dim(); })
      .def_property_readonly("generators", [](const GroupHandle& h) { return h.g().generators(); })
      .def_property_readonly("class_sizes", [](const GroupHandle& h) { return h.g().class_sizes(); })
      .def_property_readonly("num_classes", [](const GroupHandle& h) { return h.g().classes().size(); })
      .def_property_readonly("center_order", [](const GroupHandle& h) { return center(h.g()).order(); })
      .def_property_readonly("is_abelian", [](const GroupHandle& h) { return is_abelian(h.g()); })
      .def("matrix", [](const GroupHandle& h, ElementIndex i) { return h.g().matrix(i); }, py::arg("index"))
      .def("element_order", [](const GroupHandle& h, ElementIndex i) { return h.g().element_order(i); },
           py::arg("index"))
      .def("find", [](const GroupHandle& h, const Matrix& x) { return h.g().find(x); }, py::arg("matrix"))
      .def("mult", [](const GroupHandle& h, ElementIndex a, ElementIndex b) { return h.g().mult(a, b); })
      .def("inv", [](const GroupHandle& h, ElementIndex a) { return h.g().inv(a); })
      .def("__len__", [](const GroupHandle& h) { return h.g().order(); });

  m.def("build_group", &build, py::arg("expressions"), py::arg("tol") = 1e-7,
        py::arg("max_order") = kDefaultMaxOrder);
  m.def(
      "build_series",
      [](const std::string& name, std::vector<long long> params, double tol, std::size_t max_order) {
        return GroupHandle{generate_group(build_series(SeriesSpec{parse_series_id(name), std::move(params)}),
                                          tolerance(tol), max_order)};
      },
      py::arg("name"), py::arg("params"), py::arg("tol") = 1e-7, py::arg("max_order") = kDefaultMaxOrder);
  m.def(
      "series_expressions",
      [](const std::string& name, std::vector<long long> params) {
        std::vector<std::string> out;
        for (const auto& e : series_expressions(SeriesSpec{parse_series_id(name), std::move(params)}))
          out.push_back(render(e));
        return out;
      },
      py::arg("name"), py::arg("params"));
  m.def("generator_matrix", [](const std::string& e) { return parse_generator(e); }, py::arg("expression"));
  m.def("canonical_expression", [](const std::string& e) { return render(parse_expression(e)); },
        py::arg("expression"));

  m.def(
      "report_json",
      [](const GroupHandle& h, std::vector<std::string> exprs, const std::string& tables) {
        std::vector<ExpectedRow> rows;
        if (!tables.empty()) rows = read_expected_rows(tables);
        return to_json(make_group_report(h.ptr, std::move(exprs), rows)).dump();
      },
      py::arg("group"), py::arg("expressions"), py::arg("tables") = "");
  m.def("character_table_json", [](const GroupHandle& h) { return to_json(table_of(h.ptr)).dump(); }, py::arg("group"));
  m.def(
      "tensor_multiplicities",
      [](const GroupHandle& h, const std::string& left, const std::string& right) {
        const GroupPtr& g = h.ptr;
        const CharacterTable t = table_of(g);
        return decompose(character_of(tensor_rep(select(left, g, t), select(right, g, t))), t);
      },
      py::arg("group"), py::arg("left") = "def", py::arg("right") = "def");
  m.def(
      "verify_json",
      [](const std::string& tables, bool extended) {
        std::vector<ExpectedRow> rows = read_expected_rows(tables.empty() ? default_expected_rows_path() : tables);
        if (extended)
          for (auto& r : extended_rows()) rows.push_back(std::move(r));
        const VerifyReport rep = verify_expected_rows(rows);
        Json out = Json::array();
        for (const auto& r : rep.rows) out.push_back(to_json(r));
        return Json{{"total", rep.rows.size()}, {"passed", rep.passed()}, {"rows", out}}.dump();
      },
      py::arg("tables") = "", py::arg("extended") = false);

  m.def("theorem_product_predict", &theorem_product_predict, py::arg("c"), py::arg("n"));
  m.def("theorem_series_predicate", &theorem_series_predicate, py::arg("c"), py::arg("n"), py::arg("b"));
  m.def("theorem_center_predict", &theorem_center_predict, py::arg("c"), py::arg("n"), py::arg("j"), py::arg("k"));
  m.def("solve_tn", [](long long n) { return solve_tn(n).solutions; }, py::arg("n"));
  m.def("default_tables_path", &default_expected_rows_path);
}
