#include "en/verify.hpp"

#include "en/brauer.hpp"
#include "en/random.hpp"
#include "en/rmatrix.hpp"
#include "en/twisting.hpp"

namespace en {

Json CheckSuite::json() const {
  return {{"name", name}, {"checked", checked}, {"violations", Json(violations)}, {"ok", violations.empty()}};
}

void CheckSuite::add(const std::vector<std::string>& v, const std::string& where) {
  ++checked;
  for (const auto& s : v) violations.push_back(where + ": " + s);
}

void CheckSuite::expect(bool ok, const std::string& what) {
  ++checked;
  if (!ok) violations.push_back(what);
}

namespace {

Matrix upper(const Matrix& m) {
  Matrix u = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j) u(i, j) = m(i, j) * Scalar(0);
  return u;
}

}  // namespace

Json verify_all(unsigned n, std::uint64_t seed, const Field& f, bool& ok) {
  std::mt19937_64 rng(seed);
  auto e = build_en(n, f);
  std::vector<CheckSuite> suites;

  CheckSuite hopf{"Hopf axioms"};
  hopf.add(check_hopf_axioms(*e), "E(" + std::to_string(n) + ")");
  suites.push_back(hopf);

  CheckSuite qt{"quasi-triangular structures R_A"};
  CheckSuite tri{"triangular iff A symmetric"};
  for (int k = 0; k < 3; ++k) {
    Matrix a = sample::random_matrix(rng, n, n, f);
    qt.add(check_qt(*e, build_R(e, a).r, n <= 2), "A = " + a.str());
    Matrix s = sample::random_symmetric(rng, n, f);
    tri.expect(is_triangular(*e, build_R(e, s).r), "R_A not triangular for symmetric A = " + s.str());
    if (!a.is_symmetric()) tri.expect(!is_triangular(*e, build_R(e, a).r), "R_A triangular for A = " + a.str());
  }
  suites.push_back(qt);
  suites.push_back(tri);

  CheckSuite coc{"lazy cocycles"};
  for (int k = 0; k < 2; ++k) {
    auto omega = build_omega(e, upper(sample::random_matrix(rng, n, n, f)));
    auto sigma = build_sigma(e, sample::random_symmetric(rng, n, f));
    for (const auto* c : {&omega, &sigma}) {
      std::string tag = std::string(c->symmetric ? "sigma" : "omega") + "(" + c->params.str() + ")";
      coc.add(check_cocycle(c->form), tag + " cocycle");
      coc.add(check_lazy(c->form), tag + " lazy");
      coc.expect(twisted_product(c->form).table() == e->alg().table(), tag + " twisted product differs from E(n)");
    }
  }
  suites.push_back(coc);

  CheckSuite orbit{"lazy cocycle orbits"};
  for (int k = 0; k < 3; ++k) {
    Matrix a = sample::random_matrix(rng, n, n, f), s = sample::random_symmetric(rng, n, f);
    auto moved = act_on_r(build_sigma(e, s).form, build_r(e, a));
    orbit.expect((a - moved.b).is_symmetric(), "A - B not symmetric for A = " + a.str());
    orbit.expect(zl_orbit_equivalent(e, a, moved.b).has_value(), "no witness for A = " + a.str());
    Matrix skew = a - a.transpose();
    orbit.expect(verify_orbit_label(skew, h_orbit_label(skew)), "orbit label fails for " + skew.str());
  }
  suites.push_back(orbit);

  CheckSuite sym{"Sym_{M,n,r} group law"};
  for (unsigned r = 0; r <= n; ++r) {
    Matrix m = sample::random_admissible_m(rng, n, r, f);
    for (int k = 0; k < 10; ++k) {
      auto el = [&] { return SymBlockMatrix::from_matrix(r, m, sample::random_sym_block(rng, n, r, f)); };
      auto x = el(), y = el(), z = el();
      sym.expect(sym_group_op(sym_group_op(x, y), z).assembled() == sym_group_op(x, sym_group_op(y, z)).assembled(),
                 "associativity fails for r = " + std::to_string(r));
      sym.expect(sym_group_op(x, sym_inverse(x)).assembled().is_zero(), "-L is not inverse");
    }
  }
  suites.push_back(sym);

  if (n >= 1 && n <= 2 && f.p == 0) {
    CheckSuite chi{"chi on representatives and products"};
    for (int k = 0; k < 2; ++k) {
      Matrix l = sample::random_symmetric(rng, n, f);
      auto w = chi_on_representative(e, l);
      chi.expect(w.alpha.is_one() && w.l == l, "A^sigma invariants differ from (1, L) for L = " + l.str());
      chi.expect(w.strongly_inner == l.is_zero(), "strong innerness differs from L = 0");
    }
    for (unsigned r = 0; r <= n; ++r) {
      Matrix m = sample::random_admissible_m(rng, n, r, f);
      auto x = SymBlockMatrix::from_matrix(r, m, sample::random_sym_block(rng, n, r, f));
      auto y = SymBlockMatrix::from_matrix(r, m, sample::random_sym_block(rng, n, r, f));
      chi.expect(chi_product_check(e, x, y).ok(), "product invariants differ from the group law for r = " + std::to_string(r));
    }
    suites.push_back(chi);
  }

  Json out = Json::array();
  ok = true;
  for (const auto& s : suites) {
    out.push_back(s.json());
    ok = ok && s.violations.empty();
  }
  return out;
}

}  // namespace en
