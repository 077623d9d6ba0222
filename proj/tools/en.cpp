#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "en/brauer.hpp"
#include "en/io.hpp"
#include "en/random.hpp"
#include "en/rmatrix.hpp"
#include "en/twisting.hpp"
#include "en/verify.hpp"

using namespace en;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kBadInput = 2;

struct Bad : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json strings(const std::vector<std::string>& v) { return Json(v); }

Matrix load_matrix(const std::string& arg, const Field& f) { return matrix_from_json(load_json_arg(arg), f); }

Matrix square(const std::string& arg, std::size_t n, const Field& f, const char* what) {
  Matrix m = load_matrix(arg, f);
  if (m.rows() != n || m.cols() != n) throw Bad(std::string(what) + " must be " + std::to_string(n) + " x " + std::to_string(n));
  return m;
}

int emit(const Json& report, const std::string& out, bool ok) {
  std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Bad("cannot write " + out);
    f << text;
  }
  return ok ? kOk : kCheckFailed;
}

Json invariants_json(const InnerActionData& d) {
  Json mu = Json::array();
  for (const auto& x : d.mu) mu.push_back(scalar_to_json(x));
  return {{"alpha", scalar_to_json(d.alpha)}, {"mu", mu}, {"L", matrix_to_json(d.l)},
          {"strongly_inner", strongly_inner_test(d)}};
}

Json witness_json(const BrauerClassWitness& w) {
  if (w.opaque) return {{"opaque", true}};
  return {{"alpha", scalar_to_json(w.alpha)}, {"L", matrix_to_json(w.l)}, {"strongly_inner", w.strongly_inner}};
}

// Smallest r for which M is admissible and every L has a zero top-left
// (n-r) block.
unsigned infer_r(unsigned n, const Matrix& m, const std::vector<Matrix>& ls) {
  for (unsigned r = 0; r <= n; ++r) {
    if (!admissible_m(n, r, m)) continue;
    bool fits = true;
    for (const auto& l : ls) fits = fits && l.block(0, 0, n - r, n - r).is_zero();
    if (fits) return r;
  }
  throw ShapeMismatch("no r makes (L, M) a valid element of Sym_{M,n,r}");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the Hopf algebras E(n)"};
  app.require_subcommand(1);
  std::string field_spec = "q", out;

  int n = 0;
  auto* build = app.add_subcommand("build", "Build E(n) and check the Hopf axioms");
  build->add_option("--n", n, "rank n")->required();
  build->add_option("--field", field_spec, "q or pNNN");
  build->add_option("--out", out, "write the algebra JSON here");

  std::string matrix_arg, check = "qt";
  auto* rmat = app.add_subcommand("rmatrix", "Check the quasi-triangular structure R_A");
  rmat->add_option("--n", n)->required();
  rmat->add_option("--matrix", matrix_arg, "A as JSON or a JSON file")->required();
  rmat->add_option("--check", check)->check(CLI::IsMember({"qt", "triangular", "yb"}));
  rmat->add_option("--field", field_spec);
  rmat->add_option("--out", out);

  auto* orbit = app.add_subcommand("orbit", "Orbit label of a skew matrix under congruence");
  orbit->add_option("--matrix", matrix_arg)->required();
  orbit->add_option("--out", out);

  std::string cocycle_arg;
  auto* twist = app.add_subcommand("twist", "Twist r_A by the lazy cocycle sigma(L)");
  twist->add_option("--matrix", matrix_arg)->required();
  twist->add_option("--cocycle", cocycle_arg, "L (symmetric)")->required();
  twist->add_option("--out", out);

  std::string l_arg;
  auto* cliff = app.add_subcommand("clifford", "Clifford comodule algebra Cl(L)");
  cliff->add_option("--n", n)->required();
  cliff->add_option("--L", l_arg)->required();
  cliff->add_option("--check", check)->check(CLI::IsMember({"comodule", "module"}));
  cliff->add_option("--field", field_spec);
  cliff->add_option("--out", out, "write the induced module algebra (R_0) here");

  std::string module_arg, r_arg, with_arg;
  auto* inv = app.add_subcommand("invariants", "Invariants (alpha, mu, L) of an inner action");
  inv->add_option("--module", module_arg)->required();
  inv->add_option("--R", r_arg, "A for the braided product with --with");
  inv->add_option("--with", with_arg, "second module; invariants of the braided product");
  inv->add_option("--out", out);

  int r = -1;
  std::string m_arg, n2_arg;
  std::uint64_t seed = 0;
  int samples = 100;
  auto* sym = app.add_subcommand("symgroup", "The group Sym_{M,n,r}");
  sym->add_option("--n", n)->required();
  sym->add_option("--r", r)->required();
  sym->add_option("--M", m_arg)->required();
  sym->add_option("--out", out);
  sym->require_subcommand(1);
  auto* sym_op = sym->add_subcommand("op", "L (+) N and N (+) L");
  sym_op->add_option("--L", l_arg)->required();
  sym_op->add_option("--N", n2_arg)->required();
  auto* sym_ax = sym->add_subcommand("axioms", "Group axioms on seeded samples");
  sym_ax->add_option("--seed", seed);
  sym_ax->add_option("--samples", samples);

  std::string l2_arg;
  auto* chi = app.add_subcommand("chi", "Invariants of A^sigma and of braided products");
  chi->add_option("--n", n)->required();
  chi->add_option("--M", m_arg);
  chi->add_option("--L", l_arg)->required();
  chi->add_option("--r", r, "inferred when omitted");
  chi->add_option("--check-product", l2_arg);
  chi->add_option("--out", out);
  chi->add_option("--module-out", module_arg, "write the representative A^sigma here");

  std::string t_arg;
  bool no_verify = false;
  auto* aut = app.add_subcommand("autact", "The action L -> T L T^t");
  aut->add_option("--T", t_arg)->required();
  aut->add_option("--L", l_arg)->required();
  aut->add_flag("--no-verify", no_verify, "skip the A^L(T) decomposition");
  aut->add_option("--out", out);

  auto* all = app.add_subcommand("verify-all", "Run the seeded verification suites");
  all->add_option("--n", n)->required();
  all->add_option("--seed", seed);
  all->add_option("--field", field_spec);
  all->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    Field f = Field::parse(field_spec);
    auto need_n = [&] {
      if (n < 0) throw Bad("n must be nonnegative");
      return static_cast<unsigned>(n);
    };

    if (*build) {
      auto e = build_en(need_n(), f);
      auto bad = check_hopf_axioms(*e);
      if (!out.empty()) {
        std::ofstream file(out);
        if (!file) throw Bad("cannot write " + out);
        file << hopf_to_json(*e).dump() << "\n";
      }
      Json rep = {{"n", n}, {"dim", e->dim()}, {"field", f.name()}, {"hopf_axioms", strings(bad)}, {"ok", bad.empty()}};
      std::cout << rep.dump(2) << "\n";
      return bad.empty() ? kOk : kCheckFailed;
    }
    if (*rmat) {
      unsigned k = need_n();
      auto e = build_en(k, f);
      Matrix a = square(matrix_arg, k, f, "A");
      auto rr = build_R(e, a);
      Json rep = {{"check", check}, {"A", matrix_to_json(a)}};
      bool ok;
      if (check == "triangular") {
        bool t = is_triangular(*e, rr.r);
        rep["triangular"] = t;
        rep["symmetric"] = a.is_symmetric();
        ok = t == a.is_symmetric();
      } else {
        auto bad = check_qt(*e, rr.r, check == "yb");
        rep["violations"] = strings(bad);
        ok = bad.empty();
      }
      rep["ok"] = ok;
      return emit(rep, out, ok);
    }
    if (*orbit) {
      Matrix a = load_matrix(matrix_arg, f);
      if (!a.is_skew()) throw Bad("the orbit label needs a skew matrix");
      auto label = h_orbit_label(a);
      bool ok = verify_orbit_label(a, label);
      Json rep = {{"l", label.l}, {"T", matrix_to_json(label.t)}, {"sym_remainder", matrix_to_json(label.sym_remainder)},
                  {"verified", ok}};
      return emit(rep, out, ok);
    }
    if (*twist) {
      Matrix a = load_matrix(matrix_arg, f);
      if (!a.square()) throw Bad("A must be square");
      auto e = build_en(static_cast<unsigned>(a.rows()), f);
      Matrix l = square(cocycle_arg, a.rows(), f, "L");
      auto res = act_on_r(build_sigma(e, l).form, build_r(e, a));
      return emit(matrix_to_json(res.b), out, true);
    }
    if (*cliff) {
      unsigned k = need_n();
      auto e = build_en(k, f);
      Matrix l = square(l_arg, k, f, "L");
      auto cl = build_clifford(k, l);
      auto rho = clifford_coaction(cl, e);
      auto bad = check_comodule_algebra(cl.alg, rho);
      auto mod = action_from_coaction(cl.alg, rho, build_r(e, Matrix::identity(k, f) * f.zero()).form);
      Json rep = {{"dim", cl.alg.dim()}, {"comodule_violations", strings(bad)}};
      if (check == "module") {
        auto mbad = check_module_algebra(*mod);
        rep["module_violations"] = strings(mbad);
        bad.insert(bad.end(), mbad.begin(), mbad.end());
      }
      rep["ok"] = bad.empty();
      if (!out.empty()) {
        std::ofstream file(out);
        if (!file) throw Bad("cannot write " + out);
        file << module_to_json(*mod).dump() << "\n";
      }
      std::cout << rep.dump(2) << "\n";
      return bad.empty() ? kOk : kCheckFailed;
    }
    if (*inv) {
      auto a = module_from_json(load_json_arg(module_arg));
      unsigned k = en_rank(*a->hopf());
      Json rep;
      try {
        if (!with_arg.empty()) {
          auto b = module_from_json(load_json_arg(with_arg));
          if (b->hopf()->dim() != a->hopf()->dim()) throw Bad("modules over different E(n)");
          Matrix rm = r_arg.empty() ? Matrix::identity(k, a->field()) * a->field().zero()
                                    : square(r_arg, k, a->field(), "A");
          rep = invariants_json(inner_decomposition_braided(a, b, build_R(a->hopf(), rm).r));
        } else {
          rep = invariants_json(normalize_pi(inner_decomposition(*a)));
        }
      } catch (const NoInnerImplementation& e) {
        return emit({{"inner", false}, {"reason", e.what()}}, out, false);
      }
      rep["inner"] = true;
      return emit(rep, out, true);
    }
    if (*sym) {
      unsigned k = need_n();
      if (r < 0 || r > n) throw Bad("r must lie in 0..n");
      Matrix m = square(m_arg, k, f, "M");
      if (*sym_op) {
        auto x = SymBlockMatrix::from_matrix(r, m, square(l_arg, k, f, "L"));
        auto y = SymBlockMatrix::from_matrix(r, m, square(n2_arg, k, f, "N"));
        auto xy = sym_group_op(x, y), yx = sym_group_op(y, x);
        Json rep = {{"L+N", matrix_to_json(xy.assembled())}, {"N+L", matrix_to_json(yx.assembled())},
                    {"commute", xy.assembled() == yx.assembled()}};
        return emit(rep, out, true);
      }
      if (!admissible_m(k, r, m)) throw ShapeMismatch("M must be skew with its last r rows and columns zero");
      std::mt19937_64 rng(seed);
      CheckSuite s("Sym_{M,n,r} axioms");
      auto el = [&] { return SymBlockMatrix::from_matrix(r, m, sample::random_sym_block(rng, k, r, f)); };
      auto zero = sym_zero(k, r, m);
      for (int i = 0; i < samples; ++i) {
        auto x = el(), y = el(), z = el();
        s.expect(sym_group_op(sym_group_op(x, y), z).assembled() == sym_group_op(x, sym_group_op(y, z)).assembled(),
                 "associativity at sample " + std::to_string(i));
        s.expect(sym_group_op(x, zero).assembled() == x.assembled(), "unit at sample " + std::to_string(i));
        s.expect(sym_group_op(x, sym_inverse(x)).assembled().is_zero(), "inverse at sample " + std::to_string(i));
        s.expect((m * x.assembled() * m).is_zero(), "M L M != 0 at sample " + std::to_string(i));
      }
      return emit(s.json(), out, s.violations.empty());
    }
    if (*chi) {
      unsigned k = need_n();
      auto e = build_en(k, f);
      Matrix l = square(l_arg, k, f, "L");
      Matrix m = m_arg.empty() ? Matrix::identity(k, f) * f.zero() : square(m_arg, k, f, "M");
      std::vector<Matrix> ls{l};
      Matrix l2;
      if (!l2_arg.empty()) ls.push_back(l2 = square(l2_arg, k, f, "L2"));
      unsigned rr = r >= 0 ? static_cast<unsigned>(r) : infer_r(k, m, ls);
      auto x = SymBlockMatrix::from_matrix(rr, m, l);
      auto w = chi_on_representative(e, l);
      if (!module_arg.empty()) {
        std::ofstream file(module_arg);
        if (!file) throw Bad("cannot write " + module_arg);
        file << module_to_json(*w.representative).dump() << "\n";
      }
      Json rep = {{"r", rr}, {"witness", witness_json(w)}};
      bool ok = rep["witness"]["L"] == matrix_to_json(l);
      if (!l2_arg.empty()) {
        auto y = SymBlockMatrix::from_matrix(rr, m, l2);
        auto pr = chi_product_check(e, x, y);
        rep["product"] = {{"expected", matrix_to_json(pr.expected)}, {"observed", matrix_to_json(pr.observed)},
                          {"alpha", scalar_to_json(pr.alpha)}, {"ok", pr.ok()}};
        ok = ok && pr.ok();
      }
      rep["ok"] = ok;
      return emit(rep, out, ok);
    }
    if (*aut) {
      Matrix t = load_matrix(t_arg, f);
      Matrix l = load_matrix(l_arg, f);
      if (!l.is_symmetric()) throw Bad("L must be symmetric");
      Json rep = {{"result", matrix_to_json(aut_conjugation_action(t, l))}};
      bool ok = true;
      if (!no_verify && t.rows() <= 2 && t.rows() >= 1) {
        auto c = aut_conjugation_check(build_en(static_cast<unsigned>(t.rows()), f), t, l);
        rep["decomposition"] = {{"observed", matrix_to_json(c.observed)}, {"w_match", c.w_match}, {"ok", c.ok()}};
        ok = c.ok();
      }
      rep["ok"] = ok;
      return emit(rep, out, ok);
    }
    if (*all) {
      bool ok = false;
      Json suites = verify_all(need_n(), seed, f, ok);
      Json rep = {{"n", n}, {"seed", seed}, {"field", f.name()}, {"suites", suites}, {"ok", ok}};
      return emit(rep, out, ok);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
