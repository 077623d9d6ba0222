#include "doctest.h"
#include "en/en_hopf.hpp"
#include "support.hpp"

using namespace en;

TEST_CASE("E(n) dimensions and axioms") {
  for (unsigned n = 0; n <= 4; ++n) {
    auto e = build_en(n);
    CHECK(e->dim() == (std::size_t{2} << n));
    CHECK(en_rank(*e) == n);
    CHECK(check_hopf_axioms(*e).empty());
  }
  auto e1 = build_en(1, Field::prime(7));
  CHECK(check_hopf_axioms(*e1).empty());
  CHECK(build_en(0)->alg().table() == group_algebra_z2().alg().table());
}

TEST_CASE("E(n) relations") {
  auto e = build_en(3);
  const Algebra& a = e->alg();
  Elem c = en_c(*e);
  CHECK(a.mul(c, c) == a.unit());
  for (unsigned i = 1; i <= 3; ++i) {
    Elem xi = en_x(*e, i);
    CHECK(a.mul(xi, xi).empty());
    CHECK((a.mul(c, xi) + a.mul(xi, c)).empty());
    for (unsigned j = i + 1; j <= 3; ++j) {
      Elem xj = en_x(*e, j);
      CHECK((a.mul(xi, xj) + a.mul(xj, xi)).empty());
    }
  }
  auto e2 = build_en(2);
  const Algebra& b = e2->alg();
  Elem lhs = b.mul(en_x(*e2, 1), b.mul(en_c(*e2), en_x(*e2, 2)));
  CHECK(lhs == b.basis(en_index(1, 3)) * Scalar(-1));
  CHECK(b.format(lhs) == "-cx1x2");
  for (unsigned i = 1; i <= 2; ++i)
    CHECK(e2->antipode(e2->antipode(en_x(*e2, i))) == en_x(*e2, i) * Scalar(-1));
  CHECK(e2->coproduct(en_x(*e2, 1)) ==
        e2->square().pure({b.unit(), en_x(*e2, 1)}) + e2->square().pure({en_x(*e2, 1), en_c(*e2)}));
}

TEST_CASE("antipode squared is conjugation by c") {
  for (unsigned n = 0; n <= 3; ++n) {
    auto e = build_en(n);
    const Algebra& a = e->alg();
    Elem c = en_c(*e);
    for (Index i = 0; i < e->dim(); ++i) {
      Elem h = a.basis(i);
      CHECK(e->antipode(e->antipode(h)) == a.mul(c, a.mul(h, c)));
      CHECK(e->antipode_inverse(e->antipode(h)) == h);
    }
  }
}

TEST_CASE("duality isomorphism") {
  for (unsigned n = 0; n <= 3; ++n) {
    auto e = build_en(n);
    auto iso = duality_iso(e);
    const Algebra& a = e->alg();
    const Algebra& da = iso.dual->alg();
    std::size_t d = e->dim();
    CHECK(apply(iso.phi, a.unit()) == da.basis(0) + da.basis(1));
    CHECK(apply(iso.phi, en_c(*e)) == da.basis(0) - da.basis(1));
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        CHECK(apply(iso.phi, a.product(i, j)) ==
              da.mul(apply(iso.phi, a.basis(i)), apply(iso.phi, a.basis(j))));
    TensorSpace dd = iso.dual->square();
    for (Index i = 0; i < d; ++i) {
      Elem img = apply(iso.phi, a.basis(i));
      Elem lhs;
      for (const auto& [k, c] : e->delta(i))
        lhs.add_scaled(dd.pure({apply(iso.phi, a.basis(k / d)), apply(iso.phi, a.basis(k % d))}), c);
      CHECK(lhs == iso.dual->coproduct(img));
      CHECK(iso.dual->counit(img) == e->eps(i));
      CHECK(iso.dual->antipode(img) == apply(iso.phi, e->s(i)));
    }
    CHECK((iso.phi * iso.phi_inverse).is_identity());
  }
}

TEST_CASE("phi(x1 x2) agrees with convolution of functionals") {
  auto e = build_en(2);
  auto iso = duality_iso(e);
  std::size_t d = e->dim();
  // Functionals as value vectors; product evaluated through Δ of E(2) directly.
  Vector f1(d), f2(d);
  f1[en_index(0, 1)] = f1[en_index(1, 1)] = Scalar(1);
  f2[en_index(0, 2)] = f2[en_index(1, 2)] = Scalar(1);
  Elem expected;
  for (Index h = 0; h < d; ++h) {
    Scalar v;
    for (const auto& [k, c] : e->delta(h)) v += c * f1[k / d] * f2[k % d];
    expected.add(h, v);
  }
  CHECK(apply(iso.phi, e->alg().basis(en_index(0, 3))) == expected);
}

TEST_CASE("hopf automorphisms") {
  auto e2 = build_en(2);
  const Algebra& a = e2->alg();
  CHECK(hopf_automorphism(*e2, Matrix::identity(2)).is_identity());
  Matrix neg = hopf_automorphism(*e2, Matrix::identity(2) * Scalar(-1));
  CHECK(apply(neg, en_x(*e2, 1)) == en_x(*e2, 1) * Scalar(-1));
  CHECK(apply(neg, a.basis(en_index(1, 3))) == a.basis(en_index(1, 3)));
  Matrix swap = hopf_automorphism(*e2, Matrix{{0, 1}, {1, 0}});
  CHECK(apply(swap, en_x(*e2, 1)) == en_x(*e2, 2));
  CHECK(apply(swap, a.basis(en_index(0, 3))) == a.basis(en_index(0, 3)) * Scalar(-1));
  CHECK_THROWS_AS(hopf_automorphism(*e2, Matrix{{1, 1}, {1, 1}}), SingularMatrix);

  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    unsigned n = 1 + k % 3;
    auto e = build_en(n);
    const Algebra& b = e->alg();
    std::size_t d = e->dim();
    Matrix t = test::random_invertible(rng, n), s = test::random_invertible(rng, n);
    Matrix at = hopf_automorphism(*e, t);
    CHECK(at * hopf_automorphism(*e, s) == hopf_automorphism(*e, s * t));
    TensorSpace t2 = e->square();
    for (Index i = 0; i < d; ++i) {
      Elem img = apply(at, b.basis(i));
      Elem lhs;
      for (const auto& [m, c] : e->delta(i))
        lhs.add_scaled(t2.pure({apply(at, b.basis(m / d)), apply(at, b.basis(m % d))}), c);
      CHECK(lhs == e->coproduct(img));
      CHECK(e->counit(img) == e->eps(i));
      CHECK(e->antipode(img) == apply(at, e->s(i)));
      for (Index j = 0; j < d; ++j)
        CHECK(apply(at, b.product(i, j)) == b.mul(img, apply(at, b.basis(j))));
    }
  }
}
