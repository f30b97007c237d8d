#include <fstream>
#include <limits>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moonrel/moongraph.hpp"
#include "moonrel/parse.hpp"

namespace py = pybind11;
using namespace moonrel;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(q.get_str());
}

Rational from_py(const py::handle& v) { return parse_rational(py::str(v).cast<std::string>()); }

QSeries make_series(const py::iterable& coeffs) {
  std::vector<Rational> c;
  for (auto v : coeffs) c.push_back(from_py(v));
  return QSeries(std::move(c));
}

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& q : v) out.append(to_fraction(q));
  return out;
}

RatFun as_ratfun(const py::object& f) {
  if (py::isinstance<py::str>(f)) return parse_ratfun(f.cast<std::string>());
  return f.cast<RatFun>();
}

std::vector<CatalogEntry> read_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  return load_catalog(in);
}

}  // namespace

PYBIND11_MODULE(_moonrel, m) {
  m.doc() = "Exact decomposition of rational functions and relation search between q-series";

  static py::exception<Error> error(m, "MoonrelError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<RatFun>(m, "RatFun")
      .def(py::init([](const std::string& text) { return parse_ratfun(text); }))
      .def_property_readonly("degree", &RatFun::degree)
      .def_property_readonly("num", [](const RatFun& f) { return fractions(f.num().coeffs()); })
      .def_property_readonly("den", [](const RatFun& f) { return fractions(f.den().coeffs()); })
      .def("__call__",
           [](const RatFun& f, const py::object& x) -> py::object {
             auto v = f.evaluate(from_py(x));
             if (v.infinite) return py::float_(std::numeric_limits<double>::infinity());
             return to_fraction(v.value);
           })
      .def("compose", [](const RatFun& g, const py::object& h) { return compose(g, as_ratfun(h)); })
      .def("is_normal_form", [](const RatFun& f) { return is_normal_form(f); })
      .def("__eq__", [](const RatFun& a, const RatFun& b) { return a == b; })
      .def("__str__", [](const RatFun& f) { return f.to_string(); })
      .def("__repr__", [](const RatFun& f) { return "RatFun('" + f.to_string() + "')"; });

  m.def("parse", &parse_ratfun, py::arg("text"));

  m.def(
      "decompose",
      [](const py::object& f) {
        std::vector<std::pair<RatFun, RatFun>> out;
        for (const auto& d : decompose_one_level(as_ratfun(f))) out.emplace_back(d.outer, d.inner);
        return out;
      },
      py::arg("f"), "One-level decompositions (outer, inner), one per equivalence class.");

  m.def(
      "chains",
      [](const py::object& f) {
        std::vector<std::vector<RatFun>> out;
        for (const auto& c : all_chains(as_ratfun(f))) out.push_back(c.components);
        return out;
      },
      py::arg("f"), "Complete decomposition chains, outermost component first.");

  m.def(
      "equivalent",
      [](const std::pair<RatFun, RatFun>& a, const std::pair<RatFun, RatFun>& b) {
        return equivalent(Decomposition{a.first, a.second}, Decomposition{b.first, b.second});
      },
      py::arg("a"), py::arg("b"));

  py::class_<QSeries>(m, "QSeries")
      .def(py::init(&make_series), py::arg("coeffs"), "1/q + coeffs[0] + coeffs[1] q + ...")
      .def_property_readonly("prec", &QSeries::prec)
      .def_property_readonly("coeffs", [](const QSeries& s) { return fractions(s.coeffs()); })
      .def("__eq__", [](const QSeries& a, const QSeries& b) { return a == b; })
      .def("__repr__", [](const QSeries& s) { return "QSeries(" + s.as_laurent().to_string() + ")"; });

  m.def(
      "apply",
      [](const py::object& f, const QSeries& s) { return QSeries::from_laurent(eval_ratfun_at_series(as_ratfun(f), s)); },
      py::arg("f"), py::arg("s"), "f(s) for f with deg num = deg den + 1 and monic leading ratio.");

  m.def(
      "inner_series_solve",
      [](const py::object& f, const QSeries& target, long r, std::optional<long> max_prec) {
        return inner_series_solve(as_ratfun(f), substitute_power(target, r), max_prec);
      },
      py::arg("f"), py::arg("target"), py::arg("r") = 1, py::arg("max_prec") = py::none(),
      "The series s with f(s(q)) = target(q^r).");

  py::class_<Relation>(m, "Relation")
      .def_readonly("r", &Relation::r)
      .def_readonly("e", &Relation::e)
      .def_readonly("f", &Relation::f)
      .def_readonly("verified_to", &Relation::verified_to)
      .def("__repr__", [](const Relation& r) {
        return "Relation(r=" + std::to_string(r.r) + ", f='" + r.f.to_string() + "')";
      });

  m.def("find_relation", &find_relation, py::arg("s1"), py::arg("s2"), py::arg("e"),
        "First r = 1..e with s1(q^r) = f(s2(q)), deg f = e.");
  m.def(
      "find_relations_all_r",
      [](const QSeries& s1, const QSeries& s2, unsigned e) {
        std::vector<Relation> out;
        for (const auto& a : find_relations_all_r(s1, s2, e))
          if (a.relation) out.push_back(*a.relation);
        return out;
      },
      py::arg("s1"), py::arg("s2"), py::arg("e"));
  m.def("verify_relation", &verify_relation, py::arg("s1"), py::arg("s2"), py::arg("relation"));

  m.def(
      "modular_polynomial",
      [](const py::object& f1, unsigned k1, const py::object& f2, unsigned k2) {
        return modular_polynomial(as_ratfun(f1), k1, as_ratfun(f2), k2).to_string('x', 'y');
      },
      py::arg("f1"), py::arg("k1"), py::arg("f2"), py::arg("k2"));

  m.def(
      "build_graph",
      [](const std::string& catalog, unsigned e_max, unsigned jobs, bool refine) {
        RelationGraph g = build_graph(read_catalog(catalog), e_max, nullptr, jobs);
        if (refine) g = refine_graph(g);
        return export_graph(g, ExportFormat::jsonlines);
      },
      py::arg("catalog"), py::arg("e_max") = 12, py::arg("jobs") = 1, py::arg("refine") = false,
      "Relation graph of a catalog file, as JSON lines.");

  m.def(
      "export_dot",
      [](const std::string& graph_jsonlines) {
        std::istringstream in(graph_jsonlines);
        return export_graph(load_graph_jsonlines(in), ExportFormat::dot);
      },
      py::arg("graph"));

  m.def(
      "load_catalog",
      [](const std::string& path) {
        std::vector<std::tuple<std::string, py::object, QSeries>> out;
        for (auto& c : read_catalog(path)) out.emplace_back(c.name, to_fraction(c.area), c.series);
        return out;
      },
      py::arg("path"));
}
