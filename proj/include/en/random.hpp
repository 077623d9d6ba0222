#pragma once

#include <random>

#include "en/matrix.hpp"

// Seeded samplers; entries are drawn from {-3..3} unless stated.
namespace en::sample {

inline Scalar small(std::mt19937_64& rng, int lo = -3, int hi = 3) {
  return Scalar(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, const Field& f = {}) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from(small(rng));
  return m;
}

inline Matrix random_skew(std::mt19937_64& rng, std::size_t n, const Field& f = {}) {
  Matrix m = Matrix::identity(n, f) * f.zero();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = f.from(small(rng));
      m(j, i) = -m(i, j);
    }
  return m;
}

inline Matrix random_symmetric(std::mt19937_64& rng, std::size_t n, const Field& f = {}) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = f.from(small(rng));
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n, const Field& f = {}) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, f);
    if (rank(m) == n) return m;
  }
}

inline Matrix random_admissible_m(std::mt19937_64& rng, unsigned n, unsigned r, const Field& f = {}) {
  Matrix m = Matrix::identity(n, f) * f.zero();
  if (n > r) m.set_block(0, 0, random_skew(rng, n - r, f));
  return m;
}

// Symmetric with a zero top-left (n-r) block.
inline Matrix random_sym_block(std::mt19937_64& rng, unsigned n, unsigned r, const Field& f = {}) {
  Matrix l = random_symmetric(rng, n, f);
  for (unsigned i = 0; i < n - r; ++i)
    for (unsigned j = 0; j < n - r; ++j) l(i, j) = f.zero();
  return l;
}

}  // namespace en::sample
