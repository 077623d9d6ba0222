#include "doctest.h"
#include "support.hpp"

using namespace en;

TEST_CASE("scalar field arithmetic") {
  Scalar a = Scalar::rational(3, 4), b = Scalar::parse("-5/6");
  CHECK(a + b == Scalar::rational(-1, 12));
  CHECK(a * a.inverse() == Scalar(1));
  CHECK(Scalar::parse("7", 5) == Scalar::modular(2, 5));
  CHECK(Scalar::modular(3, 7) * Scalar::modular(5, 7) == Scalar(1));
  CHECK(Scalar::modular(2, 7) + Scalar::rational(1, 2) == Scalar::modular(6, 7));
  CHECK_THROWS_AS(Scalar::modular(1, 5) + Scalar::modular(1, 7), FieldMismatch);
  CHECK_THROWS_AS(Scalar::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Field::parse("p2"), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse("p9"), std::invalid_argument);
  CHECK(Field::parse("p101").p == 101);
}

TEST_CASE("square classes") {
  CHECK(Scalar(4).is_square());
  CHECK(Scalar::rational(9, 25).sqrt() == Scalar::rational(3, 5));
  CHECK_FALSE(Scalar(-1).is_square());
  CHECK(Scalar(12).square_class() == Scalar(3));
  CHECK(Scalar::rational(-1, 8).square_class() == Scalar(-2));
  CHECK(Scalar::modular(2, 7).is_square());
  CHECK(Scalar::modular(2, 7).sqrt() * Scalar::modular(2, 7).sqrt() == Scalar::modular(2, 7));
  CHECK(Scalar::modular(3, 7).square_class() == Scalar::modular(3, 7));
  Scalar r = Scalar::modular(10, 13);
  CHECK(r.sqrt() * r.sqrt() == r);
  Scalar big = Scalar::modular(3, 1000000009);
  if (big.is_square()) CHECK(big.sqrt() * big.sqrt() == big);
}

TEST_CASE("scalar field axioms on random data") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {0u, 7u, 101u}) {
    Field f{p};
    for (int k = 0; k < 200; ++k) {
      Scalar x = f.from(test::small(rng, -20, 20)) / f.from(test::small(rng, 1, 6));
      Scalar y = f.from(test::small(rng, -20, 20)), z = f.from(test::small(rng, -20, 20));
      CHECK((x + y) + z == x + (y + z));
      CHECK(x * (y + z) == x * y + x * z);
      if (!x.is_zero()) CHECK(x * x.inverse() == f.one());
    }
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix(3, 3)) == 0);
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix{{4, 2}, {2, 1}}) == 1);
  CHECK(rank(Matrix{{Scalar::rational(1, 2), 1}, {1, 2}}) == 1);
  CHECK(rank(Matrix{{Scalar::modular(1, 5), 2}, {3, 1}}) == 1);
}

TEST_CASE("determinant, inverse, solve") {
  Matrix a{{2, 1}, {Scalar::rational(1, 3), 4}};
  CHECK(determinant(a) == Scalar::rational(23, 3));
  Matrix inv = inverse_or_throw(a);
  CHECK((a * inv).is_identity());
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
  CHECK_THROWS_AS(inverse_or_throw(Matrix{{1, 2}, {2, 4}}), SingularMatrix);

  Vector b{Scalar(5), Scalar(-7)};
  CHECK(*solve_linear(Matrix::identity(2), b) == b);
  Vector x = *solve_linear(Matrix{{2, 0}, {0, 3}}, {Scalar(1), Scalar(1)});
  CHECK(x[0] == Scalar::rational(1, 2));
  CHECK(x[1] == Scalar::rational(1, 3));
  CHECK_FALSE(solve_linear(Matrix{{1, 1}, {1, 1}}, {Scalar(1), Scalar(2)}).has_value());
  CHECK_THROWS_AS(solve_linear(Matrix{{1, 1}}, {Scalar(1), Scalar(2)}), DimensionMismatch);
}

TEST_CASE("rank and determinant agree with elimination on random matrices") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {0u, 7u}) {
    Field f{p};
    for (int k = 0; k < 60; ++k) {
      std::size_t n = 1 + k % 6;
      Matrix a = test::random_matrix(rng, n, n, f);
      if (k % 3 == 0 && n > 1)
        for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = a(0, j) * f.from(2) - a(1 % n, j);
      std::size_t r = rank(a);
      CHECK(r == rank(a.transpose()));
      CHECK((r == n) == !determinant(a).is_zero());
      CHECK(kernel(a).size() == n - r);
      for (const auto& v : kernel(a))
        for (const auto& e : a * v) CHECK(e.is_zero());
      Matrix t = test::random_invertible(rng, n, f), t2 = test::random_invertible(rng, n, f);
      CHECK(rank(t * a * t2) == r);
      CHECK(determinant(a * t) == determinant(a) * determinant(t));
    }
  }
}

TEST_CASE("skew canonical form") {
  auto zero = skew_canonical_form(Matrix(3, 3));
  CHECK(zero.l == 0);
  CHECK(zero.t.is_identity());

  auto j1 = skew_canonical_form(Matrix{{0, 1}, {-1, 0}});
  CHECK(j1.l == 1);
  CHECK(j1.t.is_identity());

  Matrix a{{0, 2}, {-2, 0}};
  auto c = skew_canonical_form(a);
  CHECK(c.l == 1);
  CHECK(c.t.transpose() * standard_skew_form(2, 1) * c.t == a);

  CHECK_THROWS_AS(skew_canonical_form(Matrix{{0, 1}, {1, 0}}), NotSkewSymmetric);
  CHECK_THROWS_AS(skew_canonical_form(Matrix{{1, 0}, {0, 0}}), NotSkewSymmetric);

  std::mt19937_64 rng(17);
  for (std::uint32_t p : {0u, 7u, 65537u}) {
    Field f{p};
    for (int k = 0; k < 40; ++k) {
      std::size_t n = 1 + k % 6;
      Matrix s = test::random_skew(rng, n, f);
      if (k % 4 == 0) {
        Matrix g = test::random_matrix(rng, n, 1 + k % 2, f);
        Matrix h = Matrix::identity(g.cols(), f) * f.zero();
        if (h.rows() == 2) {
          h(0, 1) = f.one();
          h(1, 0) = -f.one();
        }
        s = g * h * g.transpose();
      }
      auto form = skew_canonical_form(s);
      CHECK(2 * form.l == rank(s));
      CHECK(form.t.transpose() * standard_skew_form(n, form.l, f) * form.t == s);
    }
  }
}

TEST_CASE("sparse linear system") {
  LinearSystem sys(3);
  sys.add_equation(SparseVec::unit(0) + SparseVec::unit(1), Scalar(3));
  sys.add_equation(SparseVec::unit(1) - SparseVec::unit(2), Scalar(1));
  sys.add_equation(SparseVec::unit(0) + SparseVec::unit(2), Scalar(2));
  CHECK(sys.rank() == 2);
  auto sol = sys.solve();
  REQUIRE(sol);
  CHECK(sol->kernel.size() == 1);
  auto& x = sol->particular;
  CHECK(x[0] + x[1] == Scalar(3));
  CHECK(x[1] - x[2] == Scalar(1));
  auto& k = sol->kernel[0];
  CHECK(k[0] + k[1] == Scalar(0));
  CHECK(k[1] - k[2] == Scalar(0));
  sys.add_equation(SparseVec::unit(0) + SparseVec::unit(2), Scalar(5));
  CHECK_FALSE(sys.consistent());
  CHECK_FALSE(sys.solve().has_value());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + trial % 5;
    Matrix a = test::random_matrix(rng, n + 2, n);
    Vector x0(n);
    for (auto& v : x0) v = test::small(rng);
    Vector b = a * x0;
    LinearSystem s(n);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      SparseVec row;
      for (std::size_t j = 0; j < n; ++j) row.add(j, a(i, j));
      s.add_equation(row, b[i]);
    }
    auto got = s.solve();
    REQUIRE(got);
    CHECK(a * got->particular == b);
    CHECK(got->kernel.size() == n - rank(a));
  }
}
