#include "en/matrix.hpp"

#include <ostream>
#include <sstream>

namespace en {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n, const Field& f) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? f.one() : f.zero();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Scalar(i == j ? 1 : 0)) return false;
  return true;
}

std::uint32_t Matrix::modulus() const {
  std::uint32_t p = 0;
  for (const auto& x : data_) {
    if (x.modulus() == 0) continue;
    if (p && x.modulus() != p) throw FieldMismatch("matrix mixes prime fields");
    p = x.modulus();
  }
  return p;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector shape");
  Vector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
  return y;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (a.data_[i] != b.data_[i]) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.str(); }

namespace {

// Integer matrix with each row of m scaled by the lcm of its denominators.
std::vector<std::vector<mpz_class>> integer_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpq_class v = m(i, j).rational_value();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpq_class v = m(i, j).rational_value() * l;
      out[i][j] = v.get_num();
    }
  }
  return out;
}

// Bareiss elimination in place; returns rank. If det != nullptr the matrix is
// square and *det receives the determinant of the integer matrix.
std::size_t bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols, mpz_class* det) {
  std::size_t rows = a.size(), r = 0;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) {
      if (det) {
        *det = 0;
        return r;
      }
      continue;
    }
    if (piv != r) {
      std::swap(a[piv], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (det) *det = r == rows ? mpz_class(sign * prev) : mpz_class(0);
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.modulus() == 0) {
    auto a = integer_rows(m);
    return bareiss(a, m.cols(), nullptr);
  }
  Matrix w = m;
  return rref(w).size();
}

Scalar determinant(const Matrix& m) {
  if (!m.square()) throw DimensionMismatch("determinant of non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  std::uint32_t p = m.modulus();
  if (p == 0) {
    mpq_class scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      mpz_class l = 1;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        mpq_class v = m(i, j).rational_value();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
      }
      scale *= l;
    }
    auto a = integer_rows(m);
    mpz_class d;
    bareiss(a, m.cols(), &d);
    return Scalar(mpq_class(d) / scale);
  }
  Matrix w = m;
  Scalar det = Scalar::modular(1, p);
  for (std::size_t c = 0; c < w.cols(); ++c) {
    std::size_t piv = c;
    while (piv < w.rows() && w(piv, c).is_zero()) ++piv;
    if (piv == w.rows()) return Scalar::modular(0, p);
    if (piv != c) {
      for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w(piv, j), w(c, j));
      det = -det;
    }
    det *= w(c, c);
    Scalar inv = w(c, c).inverse();
    for (std::size_t i = c + 1; i < w.rows(); ++i) {
      if (w(i, c).is_zero()) continue;
      Scalar f = w(i, c) * inv;
      for (std::size_t j = c; j < w.cols(); ++j) w(i, j) -= f * w(c, j);
    }
  }
  return det;
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("rhs length");
  Matrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n, Field{m.modulus()}));
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

Matrix inverse_or_throw(const Matrix& m) {
  auto inv = inverse(m);
  if (!inv) throw SingularMatrix("matrix is not invertible");
  return *inv;
}

std::vector<Vector> kernel(const Matrix& m) {
  Matrix w = m;
  auto pivots = rref(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Field f{m.modulus()};
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols(), f.zero());
    x[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -w(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

Matrix standard_skew_form(std::size_t n, std::size_t l, const Field& f) {
  if (2 * l > n) throw DimensionMismatch("2l exceeds n");
  Matrix j = Matrix::identity(n, f) * f.zero();
  for (std::size_t i = 0; i < l; ++i) {
    j(i, l + i) = f.one();
    j(l + i, i) = -f.one();
  }
  return j;
}

SkewCanonicalForm skew_canonical_form(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("skew form must be square");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a(i, i).is_zero()) throw NotSkewSymmetric("nonzero diagonal entry");
    for (std::size_t j = 0; j < i; ++j)
      if (a(i, j) != -a(j, i)) throw NotSkewSymmetric("matrix is not skew-symmetric");
  }
  std::size_t n = a.rows();
  Field f{a.modulus()};
  auto form = [&](const Vector& u, const Vector& v) {
    Scalar s = f.zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) s += u[i] * a(i, j) * v[j];
    }
    return s;
  };
  std::vector<Vector> rest;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n, f.zero());
    e[i] = f.one();
    rest.push_back(std::move(e));
  }
  std::vector<Vector> es, fs;
  for (;;) {
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t i = 0; i < rest.size() && !found; ++i)
      for (std::size_t j = i + 1; j < rest.size() && !found; ++j)
        if (!form(rest[i], rest[j]).is_zero()) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    Vector e = rest[pi], g = rest[pj];
    Scalar inv = form(e, g).inverse();
    for (auto& x : g) x *= inv;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pj));
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pi));
    for (auto& w : rest) {
      Scalar wf = form(w, g), we = form(w, e);
      for (std::size_t k = 0; k < n; ++k) w[k] = w[k] - wf * e[k] + we * g[k];
    }
    es.push_back(std::move(e));
    fs.push_back(std::move(g));
  }
  // Columns of b are the symplectic basis; b^T a b = J_l, so t = b^{-1}.
  Matrix b(n, n);
  std::size_t col = 0;
  for (auto* group : {&es, &fs, &rest})
    for (const auto& v : *group) {
      for (std::size_t i = 0; i < n; ++i) b(i, col) = v[i];
      ++col;
    }
  return {es.size(), inverse_or_throw(b)};
}

void LinearSystem::add_equation(const SparseVec& coeffs, const Scalar& rhs) {
  SparseVec row = coeffs;
  for (const auto& [i, v] : coeffs)
    if (i >= n_) throw DimensionMismatch("unknown index out of range");
  row.add(n_, rhs);
  while (!row.empty()) {
    auto [lead, c] = *row.begin();
    if (lead == n_) {
      consistent_ = false;
      return;
    }
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      row *= c.inverse();
      pivots_.emplace(lead, std::move(row));
      return;
    }
    row.add_scaled(it->second, -c);
  }
}

std::optional<LinearSystem::Solution> LinearSystem::solve() const {
  if (!consistent_) return std::nullopt;
  auto back_substitute = [&](Vector& x, bool homogeneous) {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Scalar v = homogeneous ? Scalar() : -it->second.get(n_);
      for (const auto& [k, coef] : it->second) {
        if (k == it->first || k == n_) continue;
        v += coef * x[k];
      }
      x[it->first] = -v;
    }
  };
  Solution sol;
  sol.particular.assign(n_, Scalar());
  back_substitute(sol.particular, false);
  for (std::size_t free = 0; free < n_; ++free) {
    if (pivots_.count(free)) continue;
    Vector x(n_, Scalar());
    x[free] = Scalar(1);
    back_substitute(x, true);
    sol.kernel.push_back(std::move(x));
  }
  return sol;
}

}  // namespace en
