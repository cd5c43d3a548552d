// Python bindings: strings in, strings or Fractions out.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "threept/current.hpp"
#include "threept/kahler.hpp"
#include "threept/realization.hpp"
#include "threept/ring.hpp"
#include "threept/text.hpp"
#include "threept/verify.hpp"

namespace py = pybind11;
using namespace threept;

namespace {

py::object fraction(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(q.str()); }

Rational rational(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rational::parse(py::str(h).cast<std::string>());
  const py::object frac = py::module_::import("fractions").attr("Fraction");
  if (py::isinstance(h, frac)) return Rational::parse(py::str(h).cast<std::string>());
  if (py::isinstance<py::str>(h)) return Rational::parse(h.cast<std::string>());
  throw py::type_error("expected int, Fraction or str");
}

HeisParams heis_params(const py::handle& lambda, const py::handle& mu, const py::handle& nu,
                       const py::handle& varkappa, const py::handle& kappa0, const py::handle& chi1,
                       const std::string& variant) {
  HeisParams p;
  p.lambda = rational(lambda);
  p.mu = rational(mu);
  p.nu = rational(nu);
  p.varkappa = rational(varkappa);
  p.kappa0 = rational(kappa0);
  p.chi1 = rational(chi1);
  if (variant == "derived") {
    p.variant = HeisVariant::Derived;
  } else if (variant == "paper") {
    p.variant = HeisVariant::Paper;
  } else {
    throw py::value_error("variant must be 'derived' or 'paper'");
  }
  return p;
}

std::string apply(const std::string& op, int m, const std::string& state, int r, const HeisParams& p) {
  if (r != 0 && r != 1) throw py::value_error("r must be 0 or 1");
  const FockVector v = FockVector::parse(state);
  const OscConfig oc{r};
  if (op == "a") return apply_osc(OscKind::A, m, v, oc).str();
  if (op == "a*") return apply_osc(OscKind::AStar, m, v, oc).str();
  if (op == "a1") return apply_osc(OscKind::A1, m, v, oc).str();
  if (op == "a1*") return apply_osc(OscKind::A1Star, m, v, oc).str();
  if (op == "b") return apply_heis(HeisKind::B, m, v, p).str();
  if (op == "b1") return apply_heis(HeisKind::B1, m, v, p).str();
  const Gen g = parse_gen(op);
  const RealizationConfig cfg = RealizationConfig::make(r, p);
  if (g == Gen::w0 || g == Gen::w1) return tau_extend(CurrentElem::generator(g), v, cfg).str();
  return apply_mode(g, m, v, cfg).str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in the three-point sl(2) current algebra";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("ring_mul", [](const std::string& x, const std::string& y) {
    return ring_mul(RingElem::parse(x), RingElem::parse(y)).str();
  }, py::arg("x"), py::arg("y"), "Product in the three-point ring, in the basis t^k, t^k u.");

  m.def("to_s", [](const std::string& x) { return to_s(RingElem::parse(x)).str(); }, py::arg("x"),
        "Image of a ring element as a rational function of s.");

  m.def("roundtrip_s", [](const std::string& x) {
    return from_s(to_s(RingElem::parse(x))).str();
  }, py::arg("x"), "from_s(to_s(x)), printed.");

  m.def("reduce", [](const std::string& f, const std::string& g) {
    const CentralPair c = pairing(RingElem::parse(f), RingElem::parse(g));
    return py::make_tuple(fraction(c.c0), fraction(c.c1));
  }, py::arg("f"), py::arg("g"), "Coordinates (c0, c1) of the class of f dg on the basis w0, w1.");

  m.def("bracket", [](const std::string& x, const std::string& y) {
    return bracket(CurrentElem::parse(x), CurrentElem::parse(y)).str();
  }, py::arg("x"), py::arg("y"), "Bracket in the central extension of the current algebra.");

  m.def("apply",
        [](const std::string& op, int mode, const std::string& state, int r, const py::object& lambda_,
           const py::object& mu, const py::object& nu, const py::object& varkappa, const py::object& kappa0,
           const py::object& chi1, const std::string& variant) {
          return apply(op, mode, state, r, heis_params(lambda_, mu, nu, varkappa, kappa0, chi1, variant));
        },
        py::arg("op"), py::arg("m"), py::arg("state"), py::arg("r") = 0, py::arg("lambda_") = 1,
        py::arg("mu") = 0, py::arg("nu") = 1, py::arg("varkappa") = 1, py::arg("kappa0") = 1,
        py::arg("chi1") = 0, py::arg("variant") = "derived",
        "Applies the m-th mode of op (e, f, h, e1, f1, h1, w0, w1, a, a*, a1, a1*, b, b1) to a Fock vector.");

  m.def("verify", [](const std::string& config_json) {
    const auto cfg = VerifyConfig::from_json(nlohmann::ordered_json::parse(config_json));
    std::string out;
    {
      py::gil_scoped_release release;
      out = run(cfg).dump();
    }
    return out;
  }, py::arg("config_json") = "{}", "Runs the verification suites; returns the JSON report text.");
}
