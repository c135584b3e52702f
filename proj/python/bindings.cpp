#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hesstop/errors.hpp"
#include "hesstop/serialize.hpp"

namespace py = pybind11;
using namespace hesstop;

namespace {

// Results cross the boundary as JSON text; the Python side decodes them.
std::string dump(const Json& j) { return j.dump(); }

HomoPoly poly_arg(const std::string& text) { return parse_poly(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact certification of hyperbolic homogeneous polynomials";

  auto base = py::register_exception<Error>(m, "HesstopError", PyExc_ValueError);
  py::register_exception<SyntaxError>(m, "SyntaxError", base.ptr());
  py::register_exception<NotHomogeneous>(m, "NotHomogeneous", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base.ptr());
  py::register_exception<NotHyperbolicHere>(m, "NotHyperbolicHere", base.ptr());
  py::register_exception<RefinementLimit>(m, "RefinementLimit", base.ptr());
  py::register_exception<CertificationFailed>(m, "CertificationFailed", base.ptr());

  m.def("normalize", [](const std::string& t) { return poly_arg(t).to_string(); });
  m.def("degree", [](const std::string& t) { return poly_arg(t).degree(); });
  m.def("multiply", [](const std::string& a, const std::string& b) { return (poly_arg(a) * poly_arg(b)).to_string(); });
  m.def("partial", [](const std::string& t, const std::string& axis) {
    if (axis != "x" && axis != "y") throw DomainError("axis must be 'x' or 'y'");
    return partial(poly_arg(t), axis == "x" ? Axis::X : Axis::Y).to_string();
  });
  m.def("evaluate", [](const std::string& t, double x, double y) { return poly_arg(t).eval(x, y); });
  m.def("family_P", [](int k) { return family_P(k).to_string(); });
  m.def("family_Q", [](int k) { return family_Q(k).to_string(); });
  m.def("family_f", [](int mm, int k) { return family_f(mm, k).to_string(); });

  m.def("second_fundamental_form", [](const std::string& t) { return dump(to_json(second_fundamental_form(poly_arg(t)))); });
  m.def("sign_certificate", [](const std::string& t) { return dump(to_json(sign_on_punctured_plane(poly_arg(t)))); });
  m.def("is_hyperbolic", [](const std::string& t) { return is_hyperbolic(poly_arg(t)).holds; });
  m.def("is_elliptic", [](const std::string& t) { return is_elliptic(poly_arg(t)).holds; });
  m.def("polar_max_value", [](int mm, int k) { return polar_criterion_cos_family(mm, k).max_value.get_si(); });
  m.def("verify_inequality", [](const std::string& p, const std::string& q) {
    const auto c = verify_inequality_one(poly_arg(p), poly_arg(q));
    return dump(Json{{"holds", c.holds}, {"bracket", c.bracket.to_string()}, {"certificate", to_json(c.certificate)}});
  });
  m.def("certify_isotopy", [](const std::string& p, const std::string& q) {
    return dump(to_json(isotopy_certify(poly_arg(p), poly_arg(q))));
  });
  m.def(
      "index_at_origin",
      [](const std::string& t, int samples, const std::string& branch) {
        IndexOptions opt;
        opt.n_initial = samples;
        if (branch != "plus" && branch != "minus") throw DomainError("branch must be 'plus' or 'minus'");
        opt.branch = branch == "plus" ? Branch::Plus : Branch::Minus;
        py::gil_scoped_release release;
        return dump(to_json(index_at_origin(second_fundamental_form(poly_arg(t)), opt)));
      },
      py::arg("poly"), py::arg("samples") = 1024, py::arg("branch") = "plus");
  m.def("count_separatrices", [](const std::string& t) {
    py::gil_scoped_release release;
    return dump(to_json(count_separatrices(second_fundamental_form(poly_arg(t)))));
  });
  m.def("census", [](int n) {
    Json rows = Json::array();
    for (const auto& r : enumerate(n)) rows.push_back(to_json(r));
    return dump(rows);
  });
  m.def(
      "certify_census_row",
      [](int n, int k, int mm) {
        CensusRow row{n, k, mm, 2 - mm, lower_bound(n)};
        validate_row(row);
        py::gil_scoped_release release;
        return dump(to_json(certify_row(row)));
      },
      py::arg("n"), py::arg("k"), py::arg("m"));
  m.def(
      "verify_identities",
      [](int m_max, int k_max) {
        py::gil_scoped_release release;
        return dump(to_json(verify_identities(m_max, k_max)));
      },
      py::arg("m_max") = 20, py::arg("k_max") = 3);
  m.def("T", [](int mm, int j) { return T(mm, j).get_str(); });
  m.def("F", [](int mm, int j) { return F(mm, j).get_str(); });
}
