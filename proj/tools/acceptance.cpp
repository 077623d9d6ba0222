// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any
// failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "../tests/cocycle_oracle.hpp"
#include "en/brauer.hpp"
#include "en/random.hpp"
#include "en/rmatrix.hpp"
#include "en/twisting.hpp"

using namespace en;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void absorb(const std::vector<std::string>& v, const std::string& where) {
    for (const auto& s : v) failures.push_back(where + ": " + s);
  }
};

std::string num(std::size_t k) { return std::to_string(k); }

Outcome hopf_validity() {
  Outcome o;
  for (unsigned n = 0; n <= 4; ++n) o.absorb(check_hopf_axioms(*build_en(n)), "E(" + num(n) + ")");
  return o;
}

Outcome quasi_triangularity() {
  Outcome o;
  std::mt19937_64 rng(1002);
  for (unsigned n = 1; n <= 3; ++n) {
    auto e = build_en(n);
    for (int k = 0; k < 10; ++k) {
      Matrix a = sample::random_matrix(rng, n, n);
      o.absorb(check_qt(*e, build_R(e, a).r), "A = " + a.str());
    }
  }
  return o;
}

Outcome triangularity() {
  Outcome o;
  std::mt19937_64 rng(1003);
  std::size_t symmetric = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    auto e = build_en(n);
    for (int k = 0; k < 30; ++k) {
      Matrix a = k % 2 ? sample::random_symmetric(rng, n) : sample::random_matrix(rng, n, n);
      symmetric += a.is_symmetric();
      o.expect(is_triangular(*e, build_R(e, a).r) == a.is_symmetric(), "exception at A = " + a.str());
    }
  }
  o.notes.push_back(num(symmetric) + " of 90 samples symmetric");
  return o;
}

Outcome duality_transport() {
  Outcome o;
  std::mt19937_64 rng(1004);
  std::size_t pairs = 0, mismatches = 0;
  for (unsigned n = 0; n <= 3; ++n) {
    auto e = build_en(n);
    for (int k = 0; k < 3; ++k) {
      Matrix a = sample::random_matrix(rng, n, n);
      auto r = build_r(e, a);
      Bilinear moved = transport(e, build_R(e, a).r);
      Bilinear shown = r_display(e, a);
      o.expect(r.form == moved, "build_r differs from the transport of R_A at A = " + a.str());
      o.absorb(check_coqt(moved), "transported form at A = " + a.str());
      for (Index i = 0; i < e->dim(); ++i)
        for (Index j = 0; j < e->dim(); ++j) {
          ++pairs;
          mismatches += moved.at(i, j) != shown.at(i, j);
        }
    }
  }
  o.notes.push_back(num(pairs) + " basis pairs, " + num(mismatches) + " display mismatches");
  if (mismatches) o.notes.push_back("finding: the displayed sum disagrees with the transport, which is taken as ground truth");
  return o;
}

Matrix random_upper(std::mt19937_64& rng, unsigned n) {
  Matrix m(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) m(i, j) = sample::small(rng);
  return m;
}

Outcome cocycle_suite() {
  Outcome o;
  std::mt19937_64 rng(1005);
  for (unsigned n = 1; n <= 3; ++n) {
    auto e = build_en(n);
    for (int k = 0; k < 10; ++k) {
      Matrix m = random_upper(rng, n), l = sample::random_symmetric(rng, n);
      for (const auto& c : {build_omega(e, m), build_sigma(e, l)}) {
        std::string tag = std::string(c.symmetric ? "sigma" : "omega") + "(" + c.params.str() + ")";
        o.absorb(check_cocycle(c.form), tag);
        o.absorb(check_lazy(c.form), tag);
        o.expect(twisted_product(c.form).table() == e->alg().table(), tag + ": twisted product differs");
        auto oracle = test::solve_cocycle(e, c.params, !c.symmetric);
        o.expect(oracle.consistent && oracle.free_dims == 0, tag + ": oracle not uniquely solvable");
        o.expect(oracle.table == c.form.matrix(), tag + ": oracle table differs");
      }
    }
  }
  return o;
}

Outcome orbits() {
  Outcome o;
  std::mt19937_64 rng(1006);
  for (int k = 0; k < 20; ++k) {
    unsigned n = 1 + k % 3;
    auto e = build_en(n);
    Matrix a = sample::random_matrix(rng, n, n), s = sample::random_symmetric(rng, n);
    auto moved = act_on_r(build_sigma(e, s).form, build_r(e, a));
    o.expect((a - moved.b).is_symmetric(), "A - B not symmetric at A = " + a.str());
    auto w = zl_orbit_equivalent(e, a, moved.b);
    o.expect(w && act_on_r(w->cocycle.form, build_r(e, a)).form == build_r(e, moved.b).form,
             "no verified witness at A = " + a.str());
    Matrix other = moved.b + standard_skew_form(n, n / 2) * Scalar(n >= 2 ? 1 : 0);
    if (!(a - other).is_symmetric()) o.expect(!zl_orbit_equivalent(e, a, other), "witness for a non-orbit pair");
  }
  const std::size_t bound[] = {2, 2, 3};
  for (unsigned n = 2; n <= 4; ++n) {
    std::set<std::size_t> labels;
    for (int k = 0; k < 40; ++k) {
      Matrix m = sample::random_matrix(rng, n, n);
      if (k % 3 == 0) m = sample::random_symmetric(rng, n);
      if (k % 3 == 1) {
        Matrix g = sample::random_matrix(rng, n, 2);
        m = g * standard_skew_form(2, 1) * g.transpose() + sample::random_symmetric(rng, n);
      }
      auto label = h_orbit_label(m);
      o.expect(verify_orbit_label(m, label) &&
                   (label.t.transpose() * standard_skew_form(n, label.l) * label.t - m).is_symmetric(),
               "bad certificate at " + m.str());
      labels.insert(label.l);
    }
    o.expect(labels.size() <= bound[n - 2], num(labels.size()) + " labels at n = " + num(n));
    o.notes.push_back("n=" + num(n) + ": " + num(labels.size()) + " labels");
  }
  return o;
}

Outcome sym_group() {
  Outcome o;
  std::mt19937_64 rng(1007);
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned r = 0; r <= n; ++r) {
      Matrix m = sample::random_admissible_m(rng, n, r, Field{});
      auto el = [&] { return SymBlockMatrix::from_matrix(r, m, sample::random_sym_block(rng, n, r, Field{})); };
      auto zero = sym_zero(n, r, m);
      std::string at = " at (n, r) = (" + num(n) + ", " + num(r) + ")";
      for (int k = 0; k < 100; ++k) {
        auto x = el(), y = el(), z = el();
        o.expect(sym_group_op(sym_group_op(x, y), z).assembled() == sym_group_op(x, sym_group_op(y, z)).assembled(),
                 "associativity" + at);
        o.expect(sym_group_op(x, zero).assembled() == x.assembled() &&
                     sym_group_op(zero, x).assembled() == x.assembled(),
                 "unit" + at);
        o.expect(sym_group_op(x, sym_inverse(x)).assembled().is_zero() &&
                     sym_group_op(sym_inverse(x), x).assembled().is_zero(),
                 "inverse" + at);
        SymBlockMatrix s = z;
        s.l1 = Matrix(n - r, r);
        o.expect(sym_group_op(x, s).assembled() == sym_group_op(s, x).assembled(), "(0, S) not central" + at);
      }
    }
  Matrix m{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
  auto l = SymBlockMatrix::from_matrix(1, m, Matrix{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});
  auto nn = SymBlockMatrix::from_matrix(1, m, Matrix{{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
  o.expect(sym_group_op(l, nn).assembled()(2, 2) == Scalar(6), "(L+N)_33 != 6");
  o.expect(sym_group_op(nn, l).assembled()(2, 2) == Scalar(-2), "(N+L)_33 != -2");
  return o;
}

Outcome chi_pipeline() {
  Outcome o;
  std::mt19937_64 rng(1008);
  auto e = build_en(2);
  for (int k = 0; k < 5; ++k) {
    unsigned r = static_cast<unsigned>(k % 3);
    Matrix m = sample::random_admissible_m(rng, 2, r, Field{});
    auto x = SymBlockMatrix::from_matrix(r, m, sample::random_sym_block(rng, 2, r, Field{}));
    auto y = SymBlockMatrix::from_matrix(r, m, sample::random_sym_block(rng, 2, r, Field{}));
    auto rep = chi_product_check(e, x, y);
    o.expect(rep.ok(), "product invariants differ at L = " + x.assembled().str() + ", L' = " + y.assembled().str());
    for (const auto& l : {x.assembled(), y.assembled()}) {
      auto w = chi_on_representative(e, l);
      o.expect(w.alpha.is_one() && w.l == l, "invariants of A^sigma differ from (1, L) at " + l.str());
      o.expect(w.strongly_inner == l.is_zero(), "strong innerness differs from L = 0 at " + l.str());
    }
  }
  auto w0 = chi_on_representative(e, Matrix(2, 2));
  o.expect(w0.strongly_inner, "A^sigma for L = 0 not strongly inner");
  Matrix m3{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
  auto rep = chi_product_check(build_en(3), SymBlockMatrix::from_matrix(1, m3, Matrix{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}),
                               SymBlockMatrix::from_matrix(1, m3, Matrix{{0, 0, 0}, {0, 0, 1}, {0, 1, 2}}));
  o.expect(rep.ok() && rep.observed(2, 2) == Scalar(6), "worked example at n = 3");
  o.notes.push_back("at n = 2 every valid shape has M = 0 or L = 0; the noncommutative law is checked at n = 3");
  return o;
}

Index xi(unsigned i) { return en_index(0, std::uint64_t{1} << (i - 1)); }

ModulePtr clifford_end_module(const HopfPtr& en, const Scalar& alpha, const Matrix& l) {
  auto cl = build_clifford(alpha, Vector(l.rows(), Scalar()), l);
  Elem u = matrix_element(cl.alg.left_matrix(cl.alg.basis(1)));
  std::vector<Elem> w;
  for (unsigned j = 1; j <= cl.n; ++j) w.push_back(matrix_element(cl.alg.left_matrix(cl.alg.basis(xi(j)))));
  return inner_module(en, matrix_algebra(cl.alg.dim()), u, w);
}

Outcome invariance() {
  Outcome o;
  std::mt19937_64 rng(1009);
  for (int k = 0; k < 5; ++k) {
    unsigned n = 1 + k % 2;
    auto e = build_en(n);
    Scalar alpha = sample::small(rng, 1, 5) * Scalar(k % 2 ? 1 : -1);
    Matrix l = sample::random_symmetric(rng, n);
    auto a = clifford_end_module(e, alpha, l);
    std::vector<Matrix> x;
    for (unsigned j = 0; j < n; ++j) x.push_back(Matrix{{Scalar(0), sample::small(rng, 1, 4)}, {0, 0}});
    auto p = end_of_module(e, en_representation(*e, Matrix{{1, 0}, {0, -1}}, x));
    o.expect(strongly_inner_test(inner_decomposition(*p)), "End(P) not strongly inner");
    auto before = normalize_pi(inner_decomposition(*a));
    auto after = inner_decomposition_braided(a, p, build_R(e, sample::random_skew(rng, n)).r);
    o.expect(after.alpha == before.alpha && after.l == before.l,
             "invariants moved at alpha = " + alpha.str() + ", L = " + l.str());
  }
  return o;
}

Outcome grouplike_suite() {
  Outcome o;
  for (unsigned n = 0; n <= 3; ++n) {
    auto e = build_en(n);
    const Algebra& alg = e->alg();
    auto g = grouplike_computations(e);
    Elem eps = alg.basis(0) + alg.basis(1), cc = alg.basis(0) - alg.basis(1);
    auto same = [](const std::vector<Elem>& got, const std::vector<Elem>& want) {
      auto has = [](const std::vector<Elem>& v, const Elem& x) { return std::find(v.begin(), v.end(), x) != v.end(); };
      return got.size() == want.size() && std::all_of(want.begin(), want.end(), [&](const Elem& x) { return has(got, x); });
    };
    std::string at = " at n = " + num(n);
    o.expect(same(g.g_h, {alg.unit(), en_c(*e)}), "G(E(n)) differs from {1, c}" + at);
    o.expect(same(g.g_dual, {eps, cc}), "G(E(n)*) differs from {eps, C}" + at);
    o.expect(g.g_d_dual.size() == (n == 0 ? 4u : 2u), "G(D*) has " + num(g.g_d_dual.size()) + " elements" + at);
    o.expect(theta(*e, en_c(*e), eps) == hopf_automorphism(*e, -Matrix::identity(n)), "theta(c, eps) != -Id" + at);
    o.expect(theta(*e, alg.unit(), eps) == Matrix::identity(e->dim()), "theta(1, eps) != id" + at);
  }
  std::mt19937_64 rng(1010);
  for (int k = 0; k < 5; ++k) {
    unsigned n = 1 + k % 2;
    Matrix t = sample::random_invertible(rng, n), l = sample::random_symmetric(rng, n);
    o.expect(aut_conjugation_check(build_en(n), t, l).ok(), "A^L(T) decomposition at T = " + t.str());
    Matrix id = Matrix::identity(n);
    auto conj = semidirect_mul(semidirect_mul({t, Matrix(n, n)}, {id, l}), semidirect_inverse({t, Matrix(n, n)}));
    o.expect(semidirect_equal(conj, {id, t * l * t.transpose()}), "semidirect conjugation law at T = " + t.str());
  }
  for (unsigned n = 1; n <= 2; ++n) {
    std::vector<SemidirectElem> pairs{{Matrix::identity(n), Matrix(n, n)}};
    pairs.push_back({sample::random_invertible(rng, n), sample::random_symmetric(rng, n)});
    o.absorb(semidirect_embedding_check(build_en(n), pairs).violations, "embedding at n = " + num(n));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Hopf validity, n = 0..4", hopf_validity},
      {"quasi-triangularity of R_A, 10 per n = 1..3", quasi_triangularity},
      {"triangular iff A symmetric, 30 per n = 1..3", triangularity},
      {"duality transport of R_A, n <= 3", duality_transport},
      {"lazy cocycle suite with linear-solve oracle", cocycle_suite},
      {"Z_L orbits and orbit labels", orbits},
      {"Sym_{M,n,r} group axioms, centrality, worked example", sym_group},
      {"chi pipeline at n = 2", chi_pipeline},
      {"invariance under End(P)", invariance},
      {"grouplikes, theta, Aut action, semidirect law", grouplike_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(1);
    line << std::fixed << "criterion " << i + 1 << ": " << (o.failures.empty() ? "PASS" : "FAIL") << "  "
         << criteria[i].first << "  (" << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "    note: " << n << "\n";
    for (std::size_t k = 0; k < std::min<std::size_t>(o.failures.size(), 5); ++k)
      std::cout << "    " << o.failures[k] << "\n";
    failed += !o.failures.empty();
    std::cout.flush();
  }
  std::cout << "criterion 11: not reproducible (abstract group isomorphisms); covered by criteria 7-10\n";
  return failed ? 1 : 0;
}
