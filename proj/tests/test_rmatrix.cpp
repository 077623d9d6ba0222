#include <bit>

#include "doctest.h"
#include "en/rmatrix.hpp"
#include "support.hpp"

using namespace en;

namespace {

// Coefficient of x_P⊗c^a x_F in R_A from minors: ½ (-1)^{s(s-1)/2} det A[P,F]
// times the sign pattern of the four displayed terms.
Elem oracle_R(const Hopf& h, const Matrix& a) {
  unsigned n = en_rank(h);
  std::size_t d = h.dim();
  Elem r;
  for (std::uint64_t p = 0; p < (1u << n); ++p)
    for (std::uint64_t f = 0; f < (1u << n); ++f) {
      int s = std::popcount(p);
      if (std::popcount(f) != s) continue;
      Matrix minor(s, s);
      int i = 0;
      for (unsigned pi = 0; pi < n; ++pi) {
        if (!(p >> pi & 1)) continue;
        int j = 0;
        for (unsigned fj = 0; fj < n; ++fj)
          if (f >> fj & 1) minor(i, j++) = a(pi, fj);
        ++i;
      }
      Scalar v = determinant(minor) * Scalar::rational(1, 2) * Scalar((s * (s - 1) / 2) % 2 ? -1 : 1);
      for (unsigned lc = 0; lc < 2; ++lc)
        for (unsigned rc = 0; rc < 2; ++rc) {
          // right c-exponent relative to s: rc = 0 means c^s, 1 means c^{s+1}
          Scalar sign = lc && rc ? Scalar(-1) : Scalar(1);
          r.add(en_index(lc, p) * d + en_index((s + rc) % 2, f), v * sign);
        }
    }
  return r;
}

Matrix maybe_symmetric(std::mt19937_64& rng, unsigned n, bool symmetric) {
  return symmetric ? test::random_symmetric(rng, n) : test::random_matrix(rng, n, n);
}

}  // namespace

TEST_CASE("R_0 and low-degree coefficients") {
  auto e2 = build_en(2);
  std::size_t d = e2->dim();
  auto r0 = build_R(e2, Matrix(2, 2));
  Elem expected;
  Scalar h = Scalar::rational(1, 2);
  expected.add(0 * d + 0, h);
  expected.add(1 * d + 0, h);
  expected.add(0 * d + 1, h);
  expected.add(1 * d + 1, -h);
  CHECK(r0.r == expected);

  auto e1 = build_en(1);
  auto r = build_R(e1, Matrix{{Scalar(7)}});
  CHECK(r.r.get(en_index(0, 1) * 4 + en_index(1, 1)) == Scalar::rational(7, 2));

  Matrix a{{2, 3}, {5, 7}};
  auto r2 = build_R(e2, a);
  CHECK(r2.r.get(en_index(0, 3) * d + en_index(0, 3)) == Scalar::rational(1, 2) * Scalar(-1) * (Scalar(14) - Scalar(15)));
  CHECK(recover_matrix(*e2, r2.r) == a);
}

TEST_CASE("R_A agrees with the minor expansion") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 12; ++k) {
    unsigned n = 1 + k % 4;
    auto e = build_en(n);
    Matrix a = test::random_matrix(rng, n, n);
    auto r = build_R(e, a);
    CHECK(r.r == oracle_R(*e, a));
    CHECK(recover_matrix(*e, r.r) == a);
  }
}

TEST_CASE("quasi-triangular axioms") {
  for (unsigned n = 0; n <= 3; ++n) {
    auto e = build_en(n);
    CHECK(check_qt(*e, build_R(e, Matrix(n, n)).r).empty());
  }
  std::mt19937_64 rng(43);
  for (int k = 0; k < 10; ++k) {
    unsigned n = 1 + k % 3;
    auto e = build_en(n);
    auto r = build_R(e, test::random_matrix(rng, n, n));
    CHECK(check_qt(*e, r.r).empty());
  }
  auto e2 = build_en(2);
  auto report = check_qt(*e2, e2->square().one());
  REQUIRE_FALSE(report.empty());
  bool found = false;
  for (auto& s : report) found = found || s.find("fails at h = x1") != std::string::npos;
  CHECK(found);

  auto ep = build_en(2, Field::prime(11));
  CHECK(check_qt(*ep, build_R(ep, Matrix{{Scalar::modular(3, 11), 1}, {4, 9}}).r).empty());
}

TEST_CASE("triangular iff symmetric") {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 30; ++k) {
    unsigned n = 1 + k % 3;
    auto e = build_en(n);
    Matrix a = maybe_symmetric(rng, n, k % 2 == 0);
    CHECK(is_triangular(*e, build_R(e, a).r) == a.is_symmetric());
  }
  auto e2 = build_en(2);
  CHECK(is_triangular(*e2, build_R(e2, Matrix(2, 2)).r));
  CHECK_FALSE(is_triangular(*e2, build_R(e2, Matrix{{0, 1}, {-1, 0}}).r));
}

TEST_CASE("automorphisms act by congruence") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 10; ++k) {
    unsigned n = 1 + k % 3;
    auto e = build_en(n);
    std::size_t d = e->dim();
    Matrix a = test::random_matrix(rng, n, n), t = test::random_invertible(rng, n);
    Matrix at = hopf_automorphism(*e, t);
    Elem moved;
    for (const auto& [idx, c] : build_R(e, a).r)
      moved.add_scaled(e->square().pure({apply(at, e->alg().basis(idx / d)),
                                         apply(at, e->alg().basis(idx % d))}),
                       c);
    Matrix expected = t.transpose() * a * t;
    CHECK(recover_matrix(*e, moved) == expected);
    CHECK(moved == build_R(e, expected).r);
  }
}

TEST_CASE("coquasi-triangular forms") {
  auto e2 = build_en(2);
  Matrix a{{2, -1}, {3, 5}};
  auto r = build_r(e2, a);
  CHECK(r.display_agrees);
  CHECK(restrict_to_generators(r.form) == a);
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j) {
      Index xi = en_index(0, 1u << i), cxi = en_index(1, 1u << i);
      Index xj = en_index(0, 1u << j), cxj = en_index(1, 1u << j);
      CHECK(r.form.at(cxi, xj) == a(i, j));
      CHECK(r.form.at(xi, cxj) == -a(i, j));
      CHECK(r.form.at(cxi, cxj) == a(i, j));
    }
  CHECK(check_coqt(r.form).empty());

  auto r0 = build_r(e2, Matrix(2, 2));
  CHECK(r0.form.at(1, 1) == Scalar(-1));
  CHECK(*convolution_inverse(r0.form) == r0.form);
  CHECK(convolution(r0.form, r0.form) == Bilinear::epsilon(e2));

  std::mt19937_64 rng(59);
  for (int k = 0; k < 12; ++k) {
    unsigned n = 1 + k % 3;
    auto e = build_en(n);
    Matrix m = maybe_symmetric(rng, n, k % 3 == 0);
    auto rf = build_r(e, m);
    CHECK(rf.display_agrees);
    CHECK(check_coqt(rf.form).empty());
    CHECK(is_cotriangular(rf.form) == m.is_symmetric());
  }
  Bilinear broken = r.form;
  Matrix bm = broken.matrix();
  bm(en_index(0, 3), en_index(0, 3)) += Scalar(1);
  CHECK_FALSE(check_coqt(Bilinear(e2, bm)).empty());
}
