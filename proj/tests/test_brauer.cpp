#include <doctest.h>

#include "en/brauer.hpp"
#include "en/rmatrix.hpp"
#include "support.hpp"

using namespace en;

namespace {

SymBlockMatrix random_element(std::mt19937_64& rng, unsigned n, unsigned r, const Matrix& m) {
  return SymBlockMatrix::from_matrix(r, m, test::random_sym_block(rng, n, r));
}

// The worked example in Sym_{M,3,1}.
struct Example {
  Matrix m{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
  SymBlockMatrix l = SymBlockMatrix::from_matrix(1, m, Matrix{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});
  SymBlockMatrix n = SymBlockMatrix::from_matrix(1, m, Matrix{{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
};

// L + N - 2NML - 2(NML)^t entry by entry on plain integers.
long oracle_entry(const long l[3][3], const long n[3][3], const long m[3][3], int i, int j) {
  auto nml = [&](int a, int b) {
    long s = 0;
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) s += n[a][p] * m[p][q] * l[q][b];
    return s;
  };
  return l[i][j] + n[i][j] - 2 * nml(i, j) - 2 * nml(j, i);
}

}  // namespace

TEST_CASE("Sym group worked example") {
  Example ex;
  auto ln = sym_group_op(ex.l, ex.n).assembled();
  auto nl = sym_group_op(ex.n, ex.l).assembled();
  CHECK(ln(2, 2) == Scalar(6));
  CHECK(nl(2, 2) == Scalar(-2));
  const long l[3][3] = {{0, 0, 1}, {0, 0, 0}, {1, 0, 0}};
  const long n[3][3] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 2}};
  const long m[3][3] = {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(ln(i, j) == Scalar(oracle_entry(l, n, m, i, j)));
      CHECK(nl(i, j) == Scalar(oracle_entry(n, l, m, i, j)));
    }
  CHECK(sym_group_op(ex.l, sym_inverse(ex.l)).assembled().is_zero());
}

TEST_CASE("Sym group shape errors") {
  Example ex;
  CHECK_THROWS_AS(SymBlockMatrix::from_matrix(1, ex.m, Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}), ShapeMismatch);
  CHECK_THROWS_AS(SymBlockMatrix::from_matrix(2, ex.m, Matrix(3, 3)), ShapeMismatch);
  auto other = SymBlockMatrix::from_matrix(1, Matrix(3, 3), Matrix(3, 3));
  CHECK_THROWS_AS(sym_group_op(ex.l, other), ShapeMismatch);
  CHECK_FALSE(admissible_m(2, 1, Matrix{{0, 1}, {-1, 0}}));
  CHECK(admissible_m(2, 0, Matrix{{0, 1}, {-1, 0}}));
}

TEST_CASE("Sym group axioms") {
  std::mt19937_64 rng(201);
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned r = 0; r <= n; ++r) {
      Matrix m = test::random_admissible_m(rng, n, r);
      auto zero = sym_zero(n, r, m);
      for (int k = 0; k < 100; ++k) {
        auto x = random_element(rng, n, r, m), y = random_element(rng, n, r, m), z = random_element(rng, n, r, m);
        CHECK(m * x.assembled() * m == Matrix(n, n));
        CHECK(sym_group_op(sym_group_op(x, y), z).assembled() == sym_group_op(x, sym_group_op(y, z)).assembled());
        CHECK(sym_group_op(x, zero).assembled() == x.assembled());
        CHECK(sym_group_op(zero, x).assembled() == x.assembled());
        CHECK(sym_group_op(x, sym_inverse(x)).assembled().is_zero());
        CHECK(sym_group_op(sym_inverse(x), x).assembled().is_zero());
      }
      if (m.is_zero()) {
        auto x = random_element(rng, n, r, m), y = random_element(rng, n, r, m);
        CHECK(sym_group_op(x, y).assembled() == x.assembled() + y.assembled());
      }
    }
}

TEST_CASE("central extension") {
  std::mt19937_64 rng(203);
  for (unsigned n = 2; n <= 4; ++n)
    for (unsigned r = 1; r < n; ++r) {
      Matrix m = test::random_admissible_m(rng, n, r);
      std::vector<SymBlockMatrix> sample;
      for (int k = 0; k < 10; ++k) sample.push_back(random_element(rng, n, r, m));
      std::vector<Matrix> ks;
      for (int k = 0; k < 5; ++k) ks.push_back(test::random_symmetric(rng, r));
      auto rep = central_extension_decompose(sample, ks);
      CHECK(rep.violations.empty());
      CHECK(rep.kernel_dim == r * (r + 1) / 2);
      CHECK(rep.quotient_dim == (n - r) * r);

      // [(L1,0),(N1,0)] = (0, -4 N1^t M' L1 + 4 L1^t M' N1).
      auto x = sample[0], y = sample[1];
      x.l2 = Matrix(r, r);
      y.l2 = Matrix(r, r);
      auto comm = sym_group_op(sym_group_op(sym_group_op(x, y), sym_inverse(x)), sym_inverse(y));
      Matrix mp = m.block(0, 0, n - r, n - r);
      CHECK(comm.l1.is_zero());
      CHECK(comm.l2 == Scalar(-4) * (y.l1.transpose() * mp * x.l1) + Scalar(4) * (x.l1.transpose() * mp * y.l1));
    }
  // r = n forces M = 0 and the group is (Sym_n, +).
  auto rep = central_extension_decompose({sym_zero(2, 2, Matrix(2, 2))}, {});
  CHECK(rep.quotient_dim == 0);
}

TEST_CASE("chi on representatives") {
  std::mt19937_64 rng(205);
  for (unsigned n = 1; n <= 2; ++n) {
    auto e = build_en(n);
    auto w0 = chi_on_representative(e, Matrix(n, n));
    CHECK(w0.strongly_inner);
    CHECK(w0.l.is_zero());
    for (int k = 0; k < 3; ++k) {
      Matrix l = test::random_symmetric(rng, n);
      auto w = chi_on_representative(e, l);
      CHECK(w.alpha == Scalar(1));
      CHECK(w.l == l);
      CHECK(w.strongly_inner == l.is_zero());
    }
  }
}

TEST_CASE("chi is a homomorphism at n = 2") {
  std::mt19937_64 rng(207);
  auto e = build_en(2);
  for (unsigned r = 0; r <= 2; ++r) {
    Matrix m = test::random_admissible_m(rng, 2, r);
    auto x = random_element(rng, 2, r, m), y = random_element(rng, 2, r, m);
    auto rep = chi_product_check(e, x, y);
    CHECK(rep.ok());
    CHECK(rep.expected == x.assembled() + y.assembled());
  }
}

TEST_CASE("chi worked example through the full pipeline") {
  Example ex;
  auto rep = chi_product_check(build_en(3), ex.l, ex.n);
  CHECK(rep.ok());
  CHECK(rep.observed(2, 2) == Scalar(6));
}

TEST_CASE("split maps") {
  std::mt19937_64 rng(209);
  for (unsigned n = 1; n <= 2; ++n)
    for (unsigned r = 0; r <= n; ++r) {
      Matrix m = test::random_admissible_m(rng, n, r);
      auto maps = split_maps(n, r, m);
      Matrix l = test::random_sym_block(rng, n, r);
      auto w = chi_on_representative(maps.big, l);
      auto down = maps.j_star(w);
      if (n == r) {
        CHECK(maps.small->dim() == 2);
      } else {
        CHECK(down.strongly_inner);
        CHECK(down.l.is_zero());
      }
      if (n > r) {
        Matrix ls = test::random_symmetric(rng, n - r);
        auto ws = chi_on_representative(maps.small, ls);
        auto up = maps.p_star(ws);
        Matrix padded(n, n);
        padded.set_block(0, 0, ls);
        CHECK(up.l == padded);
        auto back = maps.j_star(up);
        CHECK(back.l == ws.l);
        CHECK(back.alpha == ws.alpha);
      }
    }
  CHECK_THROWS_AS(split_maps(2, 1, Matrix{{0, 1}, {-1, 0}}), ShapeMismatch);
}

TEST_CASE("A_alpha") {
  std::mt19937_64 rng(211);
  for (unsigned n = 1; n <= 2; ++n) {
    auto e = build_en(n);
    std::vector<Matrix> ts{Matrix::identity(n), -Matrix::identity(n), test::random_invertible(rng, n)};
    for (const auto& t : ts) {
      auto a = build_A_alpha(e, t);
      // h.(l.m) = (hl).m on generators of H.
      for (Index k = 0; k < e->dim(); ++k)
        for (Index j : {Index{1}, Index{2}}) {
          Matrix lhs = a.rep[k] * a.rep[j];
          Matrix rhs(e->dim(), e->dim());
          for (const auto& [i, c] : e->alg().product(k, j)) rhs += a.rep[i] * c;
          CHECK(lhs == rhs);
        }
      CHECK(check_module_algebra(*a.module, n == 1 ? std::vector<Elem>{} : a.module->generators()).empty());
      CHECK(check_comodule_algebra(matrix_algebra(e->dim()), a.comodule, true).empty());
      auto w = witness_of(a.module);
      CHECK(w.strongly_inner);
      CHECK(w.l.is_zero());
    }
  }
  CHECK_THROWS_AS(build_A_alpha(build_en(1), Matrix(1, 1)), SingularMatrix);
}

TEST_CASE("grouplikes and theta") {
  for (unsigned n = 0; n <= 3; ++n) {
    auto e = build_en(n);
    auto g = grouplike_computations(e);
    const Algebra& alg = e->alg();
    REQUIRE(g.g_h.size() == 2);
    CHECK(std::find(g.g_h.begin(), g.g_h.end(), alg.unit()) != g.g_h.end());
    CHECK(std::find(g.g_h.begin(), g.g_h.end(), en_c(*e)) != g.g_h.end());
    Elem eps = alg.basis(0) + alg.basis(1), cc = alg.basis(0) - alg.basis(1);
    REQUIRE(g.g_dual.size() == 2);
    CHECK(std::find(g.g_dual.begin(), g.g_dual.end(), eps) != g.g_dual.end());
    CHECK(std::find(g.g_dual.begin(), g.g_dual.end(), cc) != g.g_dual.end());

    CHECK(in_g_d_dual(*e, alg.unit(), eps));
    CHECK(in_g_d_dual(*e, en_c(*e), cc));
    CHECK(g.g_d_dual.size() == (n == 0 ? 4u : 2u));
    if (n > 0) {
      CHECK_FALSE(in_g_d_dual(*e, en_c(*e), eps));
      CHECK_FALSE(in_g_d_dual(*e, alg.unit(), cc));
    }

    Matrix minus = hopf_automorphism(*e, -Matrix::identity(n));
    Matrix id = Matrix::identity(e->dim());
    CHECK(theta(*e, en_c(*e), eps) == minus);
    CHECK(theta(*e, alg.unit(), eps) == id);
    CHECK(theta(*e, en_c(*e), cc) == id);
    CHECK(theta(*e, alg.unit(), cc) == minus);
  }
}

TEST_CASE("automorphism action on Sym_n") {
  CHECK(aut_conjugation_action(Matrix{{2}}, Matrix{{3}}) == Matrix{{12}});
  std::mt19937_64 rng(213);
  for (unsigned n = 1; n <= 3; ++n)
    for (int k = 0; k < 5; ++k) {
      Matrix t = test::random_invertible(rng, n), t2 = test::random_invertible(rng, n);
      Matrix l = test::random_symmetric(rng, n);
      CHECK(aut_conjugation_action(Matrix::identity(n), l) == l);
      CHECK(aut_conjugation_action(-Matrix::identity(n), l) == l);
      CHECK(aut_conjugation_action(t * t2, l) == aut_conjugation_action(t, aut_conjugation_action(t2, l)));
    }
  CHECK_THROWS_AS(aut_conjugation_action(Matrix(1, 1), Matrix{{1}}), SingularMatrix);
}

TEST_CASE("automorphism action through A^L(T)") {
  auto rep = aut_conjugation_check(build_en(1), Matrix{{2}}, Matrix{{3}});
  CHECK(rep.ok());
  CHECK(rep.observed == Matrix{{12}});
  std::mt19937_64 rng(215);
  for (unsigned n = 1; n <= 2; ++n)
    for (int k = 0; k < 3; ++k) {
      auto r = aut_conjugation_check(build_en(n), test::random_invertible(rng, n), test::random_symmetric(rng, n));
      CHECK(r.ok());
    }
}

TEST_CASE("semidirect embedding") {
  Matrix t{{1, 2}, {0, -1}}, l{{1, 0}, {0, 2}};
  Matrix id = Matrix::identity(2), zero(2, 2);
  auto conj = semidirect_mul(semidirect_mul({t, zero}, {id, l}), semidirect_inverse({t, zero}));
  CHECK(semidirect_equal(conj, {id, t * l * t.transpose()}));
  CHECK(semidirect_equal(semidirect_mul({id, l}, {id, l * Scalar(3)}), {id, l * Scalar(4)}));
  CHECK(semidirect_equal({t, l}, {-t, l}));

  std::mt19937_64 rng(217);
  for (unsigned n = 1; n <= 2; ++n) {
    auto e = build_en(n);
    std::vector<SemidirectElem> pairs{{Matrix::identity(n), Matrix(n, n)}};
    for (int k = 0; k < 2; ++k) pairs.push_back({test::random_invertible(rng, n), test::random_symmetric(rng, n)});
    auto rep = semidirect_embedding_check(e, pairs);
    CHECK(rep.checked == pairs.size());
    CHECK(rep.violations.empty());
  }
}
