// Copyright 2026 The splitord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splitord/cli/cli.hpp"

namespace py = pybind11;
using namespace splitord;

namespace {

Element to_element(const Group& g, const py::object& obj) {
  cli::Json lit = cli::Json::array();
  if (py::isinstance<py::str>(obj) || py::isinstance<py::int_>(obj)) {
    lit.push_back(py::str(obj).cast<std::string>());
  } else {
    for (const auto& c : obj) lit.push_back(py::str(c).cast<std::string>());
  }
  return cli::parse_element(g, lit);
}

std::vector<std::string> literal(const Group& g, const Element& e) { return g.format(e); }

std::vector<Element> to_elements(const Group& g, const py::iterable& items) {
  std::vector<Element> out;
  for (const auto& it : items) out.push_back(to_element(g, py::reinterpret_borrow<py::object>(it)));
  return out;
}

py::object report_dict(const cli::Report& r) {
  return py::module_::import("json").attr("loads")(r.to_json().dump());
}

}  // namespace

PYBIND11_MODULE(_splitord, m) {
  m.doc() = "Preordered groups, positive cones and split extensions";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_TypeError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);
  py::register_exception<cli::DocumentError>(m, "DocumentError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("truth", [](const Verdict& v) { return std::string(to_string(v.truth)); })
      .def_property_readonly("scope", [](const Verdict& v) { return std::string(to_string(v.scope)); })
      .def_readonly("note", &Verdict::note)
      .def_property_readonly("witnesses",
                             [](const Verdict& v) {
                               std::vector<std::pair<std::string, std::vector<std::string>>> out;
                               for (const auto& w : v.witnesses) out.emplace_back(w.label, literal(w.group, w.value));
                               return out;
                             })
      .def("is_yes", &Verdict::is_yes)
      .def("is_no", &Verdict::is_no)
      .def("is_unknown", &Verdict::is_unknown)
      .def("__repr__", [](const Verdict& v) {
        return std::string("<Verdict ") + to_string(v.truth) + "/" + to_string(v.scope) + " " + v.note + ">";
      });

  py::class_<Group>(m, "Group")
      .def_static("cyclic", &Group::cyclic)
      .def_static("free_abelian", &Group::free_abelian)
      .def_static("rational_vector", &Group::rational_vector)
      .def_static("positive_rationals", &Group::positive_rationals)
      .def_static("symmetric", &Group::symmetric)
      .def_static("product", &Group::product)
      .def("is_finite", &Group::is_finite)
      .def("order", &Group::order)
      .def("describe", &Group::describe)
      .def("add",
           [](const Group& g, const py::object& a, const py::object& b) {
             return literal(g, g.add(to_element(g, a), to_element(g, b)));
           })
      .def("neg", [](const Group& g, const py::object& a) { return literal(g, g.neg(to_element(g, a))); })
      .def("elements",
           [](const Group& g) {
             std::vector<std::vector<std::string>> out;
             for (const auto& e : g.elements()) out.push_back(literal(g, e));
             return out;
           })
      .def("__repr__", &Group::describe);

  py::class_<Cone>(m, "Cone")
      .def_static("trivial", &Cone::trivial)
      .def_static("full", &Cone::full)
      .def_static("natural_orthant", &Cone::natural_orthant)
      .def_static("extensional",
                  [](const Group& g, const py::iterable& members) { return Cone::extensional(g, to_elements(g, members)); })
      .def_static("generated",
                  [](const Group& g, const py::iterable& seeds) {
                    return Cone::generated(g, to_elements(g, seeds));
                  })
      .def("contains", [](const Cone& c, const py::object& x) { return c.contains(to_element(c.group(), x)); })
      .def("describe", &Cone::describe)
      .def("__repr__", &Cone::describe);

  py::class_<PreorderedGroup>(m, "PreorderedGroup")
      .def(py::init<Group, Cone>())
      .def_readonly("group", &PreorderedGroup::group)
      .def_readonly("cone", &PreorderedGroup::cone)
      .def("describe", &PreorderedGroup::describe);

  py::class_<Action>(m, "Action")
      .def_static("trivial", &Action::trivial)
      .def_static("sign", &Action::sign)
      .def_static("scaling", [](const Group& acting, const Group& acted, const std::string& q) {
        return Action::scaling(acting, acted, parse_rational(q));
      })
      .def_static("dilation", &Action::dilation)
      .def("is_trivial", &Action::is_trivial)
      .def("apply",
           [](const Action& a, const py::object& b, const py::object& x) {
             return literal(a.acted(), a.apply(to_element(a.acting(), b), to_element(a.acted(), x)));
           })
      .def("describe", &Action::describe);

  py::class_<Homomorphism>(m, "Homomorphism")
      .def_static("identity", &Homomorphism::identity)
      .def_static("zero", &Homomorphism::zero)
      .def_static("scalar", [](const Group& g, long long c) { return Homomorphism::scalar(g, Integer(c)); })
      .def("__call__",
           [](const Homomorphism& h, const py::object& x) { return literal(h.target(), h(to_element(h.source(), x))); })
      .def_property_readonly("name", &Homomorphism::name);

  py::class_<Extension>(m, "Extension")
      .def_static("make", [](const PreorderedGroup& x, const PreorderedGroup& b, const Action& a) { return Extension::make(x, b, a); })
      .def_readonly("x", &Extension::x)
      .def_readonly("b", &Extension::b)
      .def_readonly("carrier", &Extension::carrier)
      .def("describe", &Extension::describe);

  py::class_<Point>(m, "Point")
      .def(py::init<Extension, Cone>())
      .def_readonly("ext", &Point::ext)
      .def_readonly("cone", &Point::cone)
      .def("describe", &Point::describe);

  m.def("product_cone", &product_cone);
  m.def("lex_cone", &lex_cone);
  m.def("minimal_cone", [](const Extension& e) { return minimal_cone(e); });
  m.def("compatible_exists", [](const Extension& e) { return compatible_exists(e).verdict; });
  m.def("is_compatible", [](const Cone& p, const Extension& e) { return is_compatible(p, e); });
  m.def("is_minimal_equal_product", [](const Extension& e) { return is_minimal_equal_product(e); });
  m.def("is_rali", [](const Point& p) { return is_rali(p).verdict; });
  m.def("is_strong", [](const Point& p) { return is_strong(p); });
  m.def("pullback", [](const Point& p, const PreorderedGroup& c, const Homomorphism& g) { return pullback(p, c, g); });
  m.def("stably_strong", [](const Point& p) { return stably_strong_over(p, default_catalog(p.ext.b)).verdict; });
  m.def("lattice_count", [](const Extension& e, std::size_t n, std::size_t k) {
    return enumerate_compatible_cones(e, LatticeScope::superadditive(n, k)).count();
  });
  m.def("monotone_aut_order", [](const PreorderedGroup& x) -> std::optional<std::size_t> {
    const MonotoneAutGroup a = monotone_aut(x);
    if (a.group.is_finite()) return a.group.order();
    return std::nullopt;
  });
  m.def("admissible", [](const PreorderedGroup& x, const std::string& which) {
    const AutConeKind k = which == "tilde" ? AutConeKind::kTilde
                          : which == "plus" ? AutConeKind::kPlus
                          : which == "minus" ? AutConeKind::kMinus
                          : which == "trivial" ? AutConeKind::kTrivial
                                               : AutConeKind::kFull;
    return admissible_check(aut_cone(monotone_aut(x), k));
  });
  m.def("no_classifier_witness", [](const PreorderedGroup& x) -> std::optional<py::tuple> {
    const auto w = no_classifier_witness(x);
    if (!w) return std::nullopt;
    const MonotoneAutGroup a = monotone_aut(x);
    return py::make_tuple(literal(a.group, w->alpha), literal(x.group, w->x));
  });

  m.def(
      "run_document",
      [](const std::string& text, std::optional<std::size_t> conj, std::optional<std::size_t> sum,
         std::optional<std::int64_t> window, unsigned scale) {
        cli::RunOptions o;
        o.overrides = {conj, sum, window};
        o.scale = scale;
        return report_dict(cli::run(cli::parse_document(text), o));
      },
      py::arg("text"), py::arg("conjugators") = py::none(), py::arg("summands") = py::none(),
      py::arg("window") = py::none(), py::arg("scale") = 1);
  m.def("validate_document", [](const std::string& text) { return cli::parse_document(text).queries.size(); });
  m.def("builtin_catalog", [] { return cli::builtin_catalog_text(); });
}
