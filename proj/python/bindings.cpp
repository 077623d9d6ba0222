#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "en/brauer.hpp"
#include "en/io.hpp"
#include "en/rmatrix.hpp"
#include "en/twisting.hpp"
#include "en/verify.hpp"

namespace py = pybind11;
using namespace en;

// Matrices cross the boundary as JSON text; the Python layer converts them
// to and from lists of Fractions.
namespace {

Matrix mat(const std::string& text) { return matrix_from_json(Json::parse(text), Field{}); }
std::string out(const Json& j) { return j.dump(); }

HopfPtr en_for(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("matrix must be square");
  return build_en(static_cast<unsigned>(a.rows()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with the Hopf algebras E(n)";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("hopf", [](unsigned n, const std::string& field) { return out(hopf_to_json(*build_en(n, Field::parse(field)))); },
        py::arg("n"), py::arg("field") = "q");
  m.def("check_hopf_axioms", [](unsigned n, const std::string& field) {
    return check_hopf_axioms(*build_en(n, Field::parse(field)));
  }, py::arg("n"), py::arg("field") = "q");
  m.def("check_qt", [](const std::string& a, bool yb) {
    Matrix am = mat(a);
    auto e = en_for(am);
    return check_qt(*e, build_R(e, am).r, yb);
  }, py::arg("a"), py::arg("with_yang_baxter") = true);
  m.def("is_triangular", [](const std::string& a) {
    Matrix am = mat(a);
    auto e = en_for(am);
    return is_triangular(*e, build_R(e, am).r);
  });
  m.def("orbit_label", [](const std::string& a) {
    Matrix am = mat(a);
    auto l = h_orbit_label(am);
    return out({{"l", l.l}, {"T", matrix_to_json(l.t)}, {"sym_remainder", matrix_to_json(l.sym_remainder)},
                {"verified", verify_orbit_label(am, l)}});
  });
  m.def("twist", [](const std::string& a, const std::string& l) {
    Matrix am = mat(a);
    auto e = en_for(am);
    return out(matrix_to_json(act_on_r(build_sigma(e, mat(l)).form, build_r(e, am)).b));
  });
  m.def("sym_op", [](unsigned r, const std::string& mm, const std::string& l, const std::string& n) {
    Matrix m0 = mat(mm);
    auto x = SymBlockMatrix::from_matrix(r, m0, mat(l)), y = SymBlockMatrix::from_matrix(r, m0, mat(n));
    return out(matrix_to_json(sym_group_op(x, y).assembled()));
  });
  m.def("chi", [](const std::string& l) {
    Matrix lm = mat(l);
    auto w = chi_on_representative(en_for(lm), lm);
    return out({{"alpha", scalar_to_json(w.alpha)}, {"L", matrix_to_json(w.l)}, {"strongly_inner", w.strongly_inner}});
  });
  m.def("chi_product", [](unsigned r, const std::string& mm, const std::string& l, const std::string& n) {
    Matrix m0 = mat(mm);
    auto rep = chi_product_check(en_for(m0), SymBlockMatrix::from_matrix(r, m0, mat(l)),
                                 SymBlockMatrix::from_matrix(r, m0, mat(n)));
    return out({{"expected", matrix_to_json(rep.expected)}, {"observed", matrix_to_json(rep.observed)},
                {"alpha", scalar_to_json(rep.alpha)}, {"ok", rep.ok()}});
  });
  m.def("aut_action", [](const std::string& t, const std::string& l) {
    return out(matrix_to_json(aut_conjugation_action(mat(t), mat(l))));
  });
  m.def("verify_all", [](unsigned n, std::uint64_t seed, const std::string& field) {
    bool ok = false;
    Json suites = verify_all(n, seed, Field::parse(field), ok);
    return out({{"n", n}, {"seed", seed}, {"suites", suites}, {"ok", ok}});
  }, py::arg("n"), py::arg("seed") = 0, py::arg("field") = "q");
}
