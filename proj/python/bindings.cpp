// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "../tools/cli.hpp"
#include "bct/element.hpp"
#include "bct/json_io.hpp"
#include "bct/order_sets.hpp"
#include "bct/region.hpp"
#include "bct/solve.hpp"
#include "bct/topology.hpp"
#include "bct/verify.hpp"

namespace py = pybind11;

// Python int <-> cpp_int through decimal strings.
namespace pybind11::detail {
template <>
struct type_caster<bct::Integer> {
  PYBIND11_TYPE_CASTER(bct::Integer, const_name("int"));

  bool load(handle src, bool convert) {
    if (!src || (!convert && !PyLong_Check(src.ptr()))) return false;
    if (!PyLong_Check(src.ptr())) return false;
    value = bct::Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const bct::Integer& v, return_value_policy, handle) {
    std::string s = v.str();
    return PyLong_FromString(s.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace bct;

Topology topology(const std::string& name) {
  auto t = Topology::from_name(name);
  if (!t) throw py::value_error("unknown topology: " + name);
  return *t;
}

std::string report(const WitnessReport& r) { return to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "bicyclic monoid C(p,q), exact regions of ω² and its topologies";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Element>(m, "Element")
      .def(py::init<Integer, Integer>(), py::arg("i") = 0, py::arg("j") = 0)
      .def_static("parse", [](const std::string& s) { return parse_element(s); })
      .def_property_readonly("i", &Element::i)
      .def_property_readonly("j", &Element::j)
      .def("is_idempotent", &Element::is_idempotent)
      .def("__mul__", &mul)
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__hash__", [](const Element& a) { return py::hash(py::make_tuple(a.i(), a.j())); })
      .def("__str__", [](const Element& a) { return to_string(a); })
      .def("__repr__", [](const Element& a) { return "Element" + to_pair_string(a); })
      .def("tuple", [](const Element& a) { return py::make_tuple(a.i(), a.j()); });

  m.def("mul", &mul);
  m.def("inv", &inv);
  m.def("trace", &trace);
  m.def("leq", &leq);
  m.def("translate", &translate, py::arg("i"), py::arg("j"), py::arg("m"), py::arg("n"), py::arg("x"));
  m.def("solve_left", &solve_left);
  m.def("solve_right", &solve_right);
  m.def("solve_two_sided", &solve_two_sided);

  py::class_<Region>(m, "Region")
      .def(py::init<>())
      .def_static("full", &Region::full)
      .def_static("from_json", [](const std::string& s) { return parse_region(s); })
      .def("to_json", [](const Region& r) { return region_json(r).dump(); })
      .def("__contains__", [](const Region& r, const Element& x) { return member(r, x); })
      .def("__eq__", [](const Region& a, const Region& b) { return a == b; })
      .def("__or__", &unite)
      .def("__and__", &intersect)
      .def("__sub__", &difference)
      .def("__invert__", &complement)
      .def("__le__", &subset)
      .def("__str__", &Region::str)
      .def("__repr__", [](const Region& r) { return "Region(" + r.str() + ")"; })
      .def("is_empty", &is_empty)
      .def("is_finite", &is_finite)
      .def("is_cofinite", &is_cofinite)
      .def("cardinality", &cardinality)
      .def("enumerate", [](const Region& r, std::size_t n) { return enumerate(r, Window{n}); });

  m.def("point", &point);
  m.def("points", &points);
  m.def("quadrant", &quadrant);
  m.def("square", &square);
  m.def("diagonal_tail", &diagonal_tail);
  m.def("diagonal", &diagonal);
  m.def("column_ray", &column_ray);
  m.def("row_ray", &row_ray);
  m.def("product_image", &product_image);
  m.def("inverse_image", &inverse_image);
  m.def("up_set", &up_set);
  m.def("down_set", &down_set);
  m.def("strict_down_set", &strict_down_set);
  m.def("updown_set", &updown_set);
  m.def("idempotents", &idempotents);

  m.def("basic", [](const std::string& t, const Element& x, const Integer& n) { return topology(t).basic(x, n); });
  m.def("closure", [](const std::string& t, const Region& r) { return closure(topology(t), r); });
  m.def("interior", [](const std::string& t, const Region& r) { return interior(topology(t), r); });
  m.def("is_isolated", [](const std::string& t, const Element& x) { return is_isolated(topology(t), x); });
  m.def("is_regular_open", [](const std::string& t, const Region& r) { return is_regular_open(topology(t), r); });
  m.def("t1_separation",
        [](const std::string& t, const Element& x, const Element& y) { return t1_separation(topology(t), x, y); });

  m.def("_verify_prop1", [](int k, int n) { return report(verify_prop1(k, n)); });
  m.def("_verify_prop2", [](int k, int n) { return report(verify_prop2(k, n)); });
  m.def("_verify_prop3", [](int k, int covers) { return report(verify_prop3(k, covers)); });
  m.def("_verify_lemma2", [](int k) { return report(verify_lemma2(k)); });
  m.def("_verify_thm1", [](int k, std::size_t w) { return report(verify_thm1(k, w)); });
  m.def("_verify_remark1", [](int k) { return report(verify_remark1(k)); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
