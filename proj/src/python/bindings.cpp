#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twobridge/io.hpp"

namespace py = pybind11;
using namespace tb;

namespace {

Slope slope_arg(const py::object& o) {
  if (py::isinstance<py::str>(o)) return Slope::parse(o.cast<std::string>());
  if (py::isinstance<py::tuple>(o)) {
    auto t = o.cast<std::pair<i64, i64>>();
    return Slope(t.first, t.second);
  }
  return o.cast<Slope>();
}

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Markoff maps, cusp shapes and end invariants of hyperbolic 2-bridge links";
  m.attr("__version__") = "0.1.0";

  py::register_exception<NotHyperbolic>(m, "NotHyperbolic", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NoGeometricRoot>(m, "NoGeometricRoot", PyExc_RuntimeError);
  py::register_exception<AmbiguousRoot>(m, "AmbiguousRoot", PyExc_RuntimeError);
  py::register_exception<NotGeometric>(m, "NotGeometric", PyExc_RuntimeError);

  py::class_<Slope>(m, "Slope")
      .def(py::init<i64, i64>(), py::arg("num"), py::arg("den"))
      .def_static("parse", [](const std::string& s) { return Slope::parse(s); })
      .def_property_readonly("num", &Slope::num)
      .def_property_readonly("den", &Slope::den)
      .def("is_inf", &Slope::is_inf)
      .def("__float__", &Slope::value)
      .def("__str__", &Slope::str)
      .def("__repr__", [](const Slope& s) { return "Slope('" + s.str() + "')"; })
      .def("__eq__", [](const Slope& a, const Slope& b) { return a == b; })
      .def("__hash__", [](const Slope& s) { return SlopeHash()(s); });

  m.def("continued_fraction", [](const py::object& r) { return continued_fraction(slope_arg(r)).a; });
  m.def("evaluate_cf", [](const std::vector<i64>& a) { return evaluate_cf(a); });
  m.def("is_hyperbolic", [](const py::object& r) { return is_hyperbolic(slope_arg(r)); });
  m.def("num_components", [](const py::object& r) { return num_components(slope_arg(r)); });
  m.def("fundamental_intervals", [](const py::object& r) {
    const auto iv = fundamental_intervals(slope_arg(r));
    return py::make_tuple(py::make_tuple(iv.I1.lo, iv.I1.hi), py::make_tuple(iv.I2.lo, iv.I2.hi));
  });
  m.def("farey_chain", [](const py::object& r) { return to_py(to_json(farey_chain(slope_arg(r)))); });
  m.def("reduce_slope", [](const py::object& s, const py::object& r) {
    const auto red = reduce_slope(slope_arg(s), slope_arg(r));
    std::vector<std::string> letters;
    for (const auto& l : red.word.letters) letters.push_back(l.str());
    const auto& M = red.word.matrix;
    return py::make_tuple(red.s0, letters, py::make_tuple(M.a, M.b, M.c, M.d));
  });
  m.def("is_nullhomotopic", [](const py::object& s, const py::object& r) { return is_nullhomotopic(slope_arg(s), slope_arg(r)); });

  m.def("trace_polynomial", [](const py::object& r) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& c : trace_polynomial(slope_arg(r)).c) out.emplace_back(c.re.str(), c.im.str());
    return out;
  }, "Coefficients (re, im) as decimal strings, ascending degree.");
  m.def("polynomial_roots", [](const std::vector<std::complex<double>>& co) {
    std::vector<cld> c(co.begin(), co.end());
    std::vector<std::complex<double>> out;
    for (const auto& z : polynomial_roots(c)) out.emplace_back(double(z.real()), double(z.imag()));
    return out;
  });
  m.def("geometric_root", [](const py::object& r) { return geometric_evaluation(slope_arg(r)).root(); });
  m.def("phi", [](const py::object& r, const py::object& s) {
    return geometric_evaluation(slope_arg(r)).phi(slope_arg(s));
  }, py::arg("r"), py::arg("s"));
  m.def("phi_at", [](std::complex<double> x, const py::object& s) { return phi_at(x, slope_arg(s)); });
  m.def("translation_length", [](std::complex<double> phi) {
    const auto l = translation_length(phi);
    return py::make_tuple(l.value, l.parabolic);
  });
  m.def("h", [](std::complex<double> x) { return h(x); });

  m.def("cusp_shape", [](const py::object& r, double eps, int max_depth) {
    CuspShapeOptions o;
    o.eps = eps;
    o.max_depth = max_depth;
    return to_py(to_json(cusp_shape(slope_arg(r), o)));
  }, py::arg("r"), py::arg("eps") = 1e-8, py::arg("max_depth") = 400);
  m.def("cusp_layout", [](const py::object& r) {
    const Slope s = slope_arg(r);
    const auto layout = layout_cusp(s, geometric_evaluation(s));
    json j = to_json(layout);
    j["folds"] = to_json(fold_report(layout));
    return to_py(j);
  });
  m.def("render_svg", [](const py::object& r, int width, int height) {
    const Slope s = slope_arg(r);
    SvgOptions o;
    o.width = width;
    o.height = height;
    return render_svg(layout_cusp(s, geometric_evaluation(s)), o);
  }, py::arg("r"), py::arg("width") = 800, py::arg("height") = 600);
  m.def("longitude_class", [](const py::object& r, bool reversed) {
    const auto lc = longitude_class(slope_arg(r), reversed ? Orientation::Reversed : Orientation::Default);
    py::dict d;
    d["components"] = lc.components;
    d["lk_formula"] = lc.lk_ell_K;
    d["lk_diagram"] = lc.lk_ell_K_diagram;
    d["lk_components"] = lc.lk_components;
    d["delta"] = lc.delta;
    d["coefficients"] = lc.coefficients;
    return d;
  }, py::arg("r"), py::arg("reversed") = false);
  m.def("bowditch_L", [](const py::object& r, int depth) { return to_py(to_json(bowditch_L(slope_arg(r), depth))); },
        py::arg("r"), py::arg("depth") = 4);
  m.def("is_end_invariant", [](const py::object& s, const py::object& r) { return is_end_invariant(slope_arg(s), slope_arg(r)); });
}
