#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "en/scalar.hpp"
#include "en/sparse.hpp"

namespace en {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SingularMatrix : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotSkewSymmetric : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotSymmetric : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Scalar>;

// Dense matrix over Scalar, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n, const Field& f = {});
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool is_zero() const;
  bool is_symmetric() const { return square() && *this == transpose(); }
  bool is_skew() const { return square() && *this == -transpose(); }
  bool is_identity() const;
  // Modulus shared by the entries (0 for Q); throws FieldMismatch on a mix.
  std::uint32_t modulus() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Rank over the exact field: Bareiss fraction-free elimination on the
// integer matrix obtained by clearing row denominators over Q, plain
// elimination over F_p.
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);

// Exact solution of a*x = b, nullopt when inconsistent.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);
Matrix inverse_or_throw(const Matrix& m);
// Basis of {x : m*x = 0}.
std::vector<Vector> kernel(const Matrix& m);

// The n x n matrix [[0, I_l, 0], [-I_l, 0, 0], [0, 0, 0]].
Matrix standard_skew_form(std::size_t n, std::size_t l, const Field& f = {});

struct SkewCanonicalForm {
  std::size_t l = 0;
  Matrix t;  // invertible, t^T * J_l * t == input
};

// Congruence reduction of an alternating matrix to J_l by symplectic pivoting.
SkewCanonicalForm skew_canonical_form(const Matrix& a);

// Incremental sparse Gaussian elimination for systems with many more
// equations than unknowns. Unknowns are 0..n-1.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : n_(unknowns) {}

  void add_equation(const SparseVec& coeffs, const Scalar& rhs = Scalar());
  bool consistent() const { return consistent_; }
  std::size_t unknowns() const { return n_; }
  std::size_t rank() const { return pivots_.size(); }

  struct Solution {
    Vector particular;            // free variables set to zero
    std::vector<Vector> kernel;   // basis of the homogeneous solutions
  };
  std::optional<Solution> solve() const;

 private:
  std::size_t n_;
  bool consistent_ = true;
  // leading column -> row normalized to leading coefficient 1; the rhs is
  // stored at index n_.
  std::map<Index, SparseVec> pivots_;
};

}  // namespace en
