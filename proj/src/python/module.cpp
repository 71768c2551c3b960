#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superspace/errors.hpp"
#include "superspace/io.hpp"
#include "superspace/irreps.hpp"
#include "superspace/operators.hpp"
#include "superspace/sphere.hpp"
#include "superspace/verify.hpp"

namespace py = pybind11;
using namespace superspace;

namespace {

// Rationals cross the boundary as fractions.Fraction.
py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(q));
}

Rational from_python(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

Polynomial from_json_text(const std::string& text) { return polynomial_from_json(nlohmann::json::parse(text)); }

py::list components(const DecompositionReport& report) {
  py::list out;
  for (const auto& c : report.components) out.append(py::make_tuple(c.i, c.harmonic));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact harmonic analysis in superspace";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<DegreeError>(m, "DegreeError", base.ptr());
  py::register_exception<ParamsMismatch>(m, "ParamsMismatch", base.ptr());
  py::register_exception<NotHarmonicError>(m, "NotHarmonicError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  py::class_<SpaceParams>(m, "SpaceParams")
      .def(py::init<int, int>(), py::arg("m"), py::arg("n"))
      .def_property_readonly("m", &SpaceParams::m)
      .def_property_readonly("n", &SpaceParams::n)
      .def_property_readonly("M", &SpaceParams::super_dimension)
      .def("fischer_regular", &SpaceParams::fischer_regular)
      .def(py::self == py::self)
      .def("__repr__", &SpaceParams::to_string);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, const SpaceParams& params) { return parse_polynomial(text, params); }),
           py::arg("text"), py::arg("params"))
      .def_static("from_json", &from_json_text)
      .def_static("constant", [](const SpaceParams& s, const py::object& c) { return Polynomial::constant(s, from_python(c)); })
      .def_property_readonly("params", &Polynomial::params)
      .def("to_json", [](const Polynomial& p) { return polynomial_to_json(p).dump(); })
      .def("degree", &Polynomial::degree)
      .def("is_zero", &Polynomial::is_zero)
      .def("is_homogeneous", &Polynomial::is_homogeneous)
      .def("homogeneous_part", &Polynomial::homogeneous_part)
      .def("constant_term", [](const Polynomial& p) { return to_fraction(p.constant_term()); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def("__mul__", [](const Polynomial& p, const py::object& c) { return from_python(c) * p; }, py::is_operator())
      .def("__rmul__", [](const Polynomial& p, const py::object& c) { return from_python(c) * p; }, py::is_operator())
      .def("__pow__", [](const Polynomial& p, int k) { return power(p, k); })
      .def(py::self == py::self)
      .def("__len__", &Polynomial::size)
      .def("__str__", &format_polynomial)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + format_polynomial(p) + "', " + p.params().to_string() + ")"; });

  py::class_<PiScaledValue>(m, "PiScaledValue")
      .def(py::init([](const py::object& c, int e) { return PiScaledValue(from_python(c), e); }), py::arg("coeff"),
           py::arg("half_pi_exp") = 0)
      .def_property_readonly("coeff", [](const PiScaledValue& v) { return to_fraction(v.coeff()); })
      .def_property_readonly("half_pi_exp", &PiScaledValue::half_pi_exp)
      .def("is_zero", &PiScaledValue::is_zero)
      .def(py::self == py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def("to_json", [](const PiScaledValue& v) { return pi_value_to_json(v).dump(); })
      .def("__str__", &PiScaledValue::to_string)
      .def("__repr__", [](const PiScaledValue& v) { return "PiScaledValue(" + v.to_string() + ")"; });

  // operators
  m.def("laplace", &laplace);
  m.def("laplace_b", &laplace_b);
  m.def("laplace_f", &laplace_f);
  m.def("euler", &euler);
  m.def("mul_r2", &mul_r2);
  m.def("r2", &r2);
  m.def("rb2", &rb2);
  m.def("rf2", &rf2);
  m.def("laplace_beltrami", &laplace_beltrami);
  m.def("exp_neg_quarter_laplace", &exp_neg_quarter_laplace);
  m.def("partial_derivative", [](const Polynomial& p, const std::string& var) {
    if (var.size() < 2 || (var[0] != 'x' && var[0] != 'e')) throw PreconditionError("variable must look like x1 or e2");
    const int index = std::stoi(var.substr(1));
    return partial_derivative(p, var[0] == 'x' ? Variable::x(index) : Variable::e(index));
  });

  // fischer
  m.def("dim_Pk", &dim_Pk);
  m.def("dim_Hk", &dim_Hk);
  m.def("dim_Hk_bosonic", &dim_Hk_bosonic);
  m.def("dim_Hk_fermionic", &dim_Hk_fermionic);
  m.def("is_harmonic", &is_harmonic);
  m.def("harmonic_basis", &harmonic_basis);
  m.def("fischer_project", &fischer_project);
  m.def("fischer_project_lb", &fischer_project_lb);
  m.def("fischer_decompose", [](const Polynomial& R) { return components(fischer_decompose(R)); },
        "list of (i, harmonic) with R = sum x^{2i} harmonic");
  m.def("fischer_report_json", [](const Polynomial& R) { return to_json(fischer_decompose(R)).dump(); });

  // irreps
  m.def("f_poly", &f_poly, py::arg("l"), py::arg("p"), py::arg("q"), py::arg("params"));
  m.def("f_coefficients", [](int l, int p, int q, const SpaceParams& s) {
    py::list out;
    for (const auto& a : f_coefficients(l, p, q, s)) out.append(to_fraction(a));
    return out;
  });
  m.def("q_projector", &q_projector);
  m.def("irrep_decompose", [](const Polynomial& H) {
    py::list out;
    for (const auto& c : irrep_decompose(H)) out.append(py::make_tuple(py::make_tuple(c.label.l, c.label.p, c.label.q), c.part));
    return out;
  });
  m.def("dim_check", &dim_check);
  m.def("fermionic_fischer_decompose", [](const Polynomial& R) { return components(fermionic_fischer_decompose(R)); });
  m.def("fermionic_harmonic_basis", &fermionic_harmonic_basis);

  // integrals
  m.def("pizzetti", &pizzetti);
  m.def("berezin", &berezin);
  m.def("superspace_pizzetti", &superspace_pizzetti);
  m.def("basis_integral", [](int i, const Polynomial& R) { return to_fraction(basis_integral(i, R)); });
  m.def("general_integral", [](const std::vector<py::object>& weights, const Polynomial& R) {
    std::vector<Rational> w;
    for (const auto& a : weights) w.push_back(from_python(a));
    return to_fraction(SphereFunctional(R.params(), std::move(w))(R));
  }, py::arg("weights"), py::arg("R"));
  m.def("integral_one", [](const Polynomial& R) { return to_fraction(integral_one(R)); });
  m.def("orthogonal", [](const Polynomial& a, const Polynomial& b) { return orthogonality_check(a, b); },
        "Pizzetti orthogonality of two homogeneous harmonics");
  m.def("invariant_functional_space_dim", [](const SpaceParams& s, std::optional<int> cap) {
    return invariant_functional_space_dim(s, cap.value_or(default_degree_cap(s)));
  }, py::arg("params"), py::arg("degree_cap") = py::none());

  m.def("run_criterion", [](int index, std::uint64_t seed) {
    const auto r = run_criterion(index, VerifyOptions{seed});
    return py::make_tuple(r.passed, format_result(r));
  }, py::arg("index"), py::arg("seed") = VerifyOptions{}.seed);
}
