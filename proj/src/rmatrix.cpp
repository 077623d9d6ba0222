#include "en/rmatrix.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>

#include "en/parallel.hpp"

namespace en {

namespace {

std::vector<unsigned> bits_of(std::uint64_t m) {
  std::vector<unsigned> out;
  for (unsigned i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

int permutation_sign(const std::vector<unsigned>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

int triangular_sign(unsigned s) { return (s * (s - 1) / 2) % 2 ? -1 : 1; }

void require_square(const Hopf& en, const Matrix& a) {
  unsigned n = en_rank(en);
  if (a.rows() != n || a.cols() != n) throw DimensionMismatch("matrix must be n x n");
}

}  // namespace

Scalar signed_product_sum(const Matrix& a, std::uint64_t p_mask, std::uint64_t f_mask) {
  auto p = bits_of(p_mask), f = bits_of(f_mask);
  if (p.size() != f.size()) throw DimensionMismatch("index tuples of different length");
  std::vector<unsigned> eta(p.size());
  std::iota(eta.begin(), eta.end(), 0u);
  Scalar total;
  do {
    Scalar term(permutation_sign(eta));
    for (std::size_t k = 0; k < p.size() && !term.is_zero(); ++k) term *= a(p[k], f[eta[k]]);
    total += term;
  } while (std::next_permutation(eta.begin(), eta.end()));
  return total;
}

QTStructure build_R(const HopfPtr& en, const Matrix& a) {
  require_square(*en, a);
  unsigned n = en_rank(*en);
  std::size_t d = en->dim();
  const Field& fld = en->field();
  Scalar half = fld.from(Scalar::rational(1, 2));
  Elem r;
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
    unsigned s = static_cast<unsigned>(std::popcount(p));
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
      if (static_cast<unsigned>(std::popcount(f)) != s) continue;
      Scalar coef = signed_product_sum(a, p, f);
      if (coef.is_zero()) continue;
      coef = fld.from(coef) * half * Scalar(triangular_sign(s));
      Index xp = en_index(0, p), cxp = en_index(1, p);
      Index cs = en_index(s % 2, f), cs1 = en_index((s + 1) % 2, f);
      r.add(xp * d + cs, coef);
      r.add(cxp * d + cs, coef);
      r.add(xp * d + cs1, coef);
      r.add(cxp * d + cs1, -coef);
    }
  }
  return {en, a, r};
}

Matrix recover_matrix(const Hopf& en, const Elem& r) {
  unsigned n = en_rank(en);
  std::size_t d = en.dim();
  Matrix a(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      a(i, j) = Scalar(2) * r.get(en_index(0, std::uint64_t{1} << i) * d +
                                  en_index(1, std::uint64_t{1} << j));
  return a;
}

Elem embed_legs(const Hopf& h, const Elem& r, unsigned m, unsigned p, unsigned q) {
  std::size_t d = h.dim();
  if (p >= m || q >= m || p == q) throw std::invalid_argument("bad tensor leg positions");
  Index one = h.alg().unit().begin()->first;
  Elem out;
  for (const auto& [k, c] : r) {
    std::vector<Index> parts(m, one);
    parts[p] = k / d;
    parts[q] = k % d;
    Index idx = 0;
    for (auto x : parts) idx = idx * d + x;
    out.add(idx, c);
  }
  return out;
}

std::vector<std::string> check_qt(const Hopf& h, const Elem& r, bool with_yang_baxter) {
  std::vector<std::string> bad;
  std::size_t d = h.dim();
  TensorSpace t2 = h.square(), t3 = h.cube();
  Elem r13 = embed_legs(h, r, 3, 0, 2), r23 = embed_legs(h, r, 3, 1, 2),
       r12 = embed_legs(h, r, 3, 0, 1);

  Elem delta_left, delta_right;
  for (const auto& [k, c] : r) {
    for (const auto& [m, e] : h.delta(k / d)) delta_left.add(m * d + k % d, c * e);
    for (const auto& [m, e] : h.delta(k % d)) delta_right.add((k / d) * d * d + m, c * e);
  }
  if (delta_left != t3.mul(r13, r23)) bad.push_back("(Δ⊗id)R = R13 R23 fails");
  if (delta_right != t3.mul(r13, r12)) bad.push_back("(id⊗Δ)R = R13 R12 fails");

  std::mutex mu;
  std::vector<Index> failing;
  parallel_for(d, [&](std::size_t i) {
    Elem lhs = t2.mul(r, h.delta(i));
    Elem rhs = t2.mul(t2.permute(h.delta(i), {1, 0}), r);
    if (lhs != rhs) {
      std::lock_guard lock(mu);
      failing.push_back(i);
    }
  });
  if (!failing.empty()) {
    std::sort(failing.begin(), failing.end());
    bad.push_back("R Δ(h) = Δ^op(h) R fails at h = " + h.alg().labels()[failing.front()]);
  }

  Elem inv;
  for (const auto& [k, c] : r)
    for (const auto& [m, e] : h.s(k / d)) inv.add(m * d + k % d, c * e);
  if (t2.mul(r, inv) != t2.one() || t2.mul(inv, r) != t2.one())
    bad.push_back("R is not invertible with inverse (S⊗id)R");

  if (with_yang_baxter) {
    Elem lhs = t3.mul(t3.mul(r12, r13), r23);
    Elem rhs = t3.mul(t3.mul(r23, r13), r12);
    if (lhs != rhs) bad.push_back("Yang-Baxter equation fails");
  }
  return bad;
}

bool is_triangular(const Hopf& h, const Elem& r) {
  TensorSpace t2 = h.square();
  return t2.mul(t2.permute(r, {1, 0}), r) == t2.one();
}

Bilinear transport(const HopfPtr& en, const Elem& r) {
  auto iso = duality_iso(en);
  std::size_t d = en->dim();
  Matrix m = Matrix::identity(d, en->field()) * en->field().zero();
  for (const auto& [k, c] : r) {
    Index a = k / d, b = k % d;
    for (Index i = 0; i < d; ++i) {
      const Scalar& pa = iso.phi(i, a);
      if (pa.is_zero()) continue;
      for (Index j = 0; j < d; ++j) m(i, j) += c * pa * iso.phi(j, b);
    }
  }
  return {en, m};
}

Bilinear r_display(const HopfPtr& en, const Matrix& a) {
  require_square(*en, a);
  unsigned n = en_rank(*en);
  std::size_t d = en->dim();
  const Field& fld = en->field();
  Matrix m = Matrix::identity(d, fld) * fld.zero();
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
    unsigned s = static_cast<unsigned>(std::popcount(p));
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
      if (static_cast<unsigned>(std::popcount(f)) != s) continue;
      Scalar coef = signed_product_sum(a, p, f);
      if (coef.is_zero()) continue;
      coef = fld.from(coef) * Scalar(triangular_sign(s));
      Scalar par = coef * Scalar(s % 2 ? -1 : 1);
      m(en_index(0, p), en_index(0, f)) += coef;
      m(en_index(1, p), en_index(0, f)) += coef;
      m(en_index(0, p), en_index(1, f)) += par;
      m(en_index(1, p), en_index(1, f)) -= par;
    }
  }
  return {en, m};
}

CoQTStructure build_r(const HopfPtr& en, const Matrix& a) {
  Bilinear form = transport(en, build_R(en, a).r);
  bool agrees = form == r_display(en, a);
  return {en, a, form, agrees};
}

Matrix restrict_to_generators(const Bilinear& r) {
  unsigned n = en_rank(*r.domain());
  Matrix m(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      m(i, j) = r.at(en_index(0, std::uint64_t{1} << i), en_index(0, std::uint64_t{1} << j));
  return m;
}

std::vector<std::string> check_coqt(const Bilinear& r) {
  const Hopf& h = *r.domain();
  const Algebra& alg = h.alg();
  std::size_t d = h.dim();
  std::vector<std::string> bad;
  std::mutex mu;
  bool c1 = false, c2 = false, c3 = false;
  parallel_for(d, [&](std::size_t x) {
    bool f1 = false, f2 = false, f3 = false;
    for (Index y = 0; y < d && !(f1 && f2); ++y)
      for (Index z = 0; z < d; ++z) {
        if (!f1) {
          Scalar lhs = r(alg.product(x, y), alg.basis(z));
          Scalar rhs;
          for (const auto& [k, c] : h.delta(z)) rhs += c * r.at(x, k / d) * r.at(y, k % d);
          f1 = lhs != rhs;
        }
        if (!f2) {
          Scalar lhs = r(alg.basis(x), alg.product(y, z));
          Scalar rhs;
          for (const auto& [k, c] : h.delta(x)) rhs += c * r.at(k / d, z) * r.at(k % d, y);
          f2 = lhs != rhs;
        }
      }
    for (Index y = 0; y < d && !f3; ++y) {
      Elem lhs, rhs;
      for (const auto& [kx, cx] : h.delta(x))
        for (const auto& [ky, cy] : h.delta(y)) {
          Scalar a = r.at(kx / d, ky / d);
          if (!a.is_zero()) lhs.add_scaled(alg.product(kx % d, ky % d), cx * cy * a);
          Scalar b = r.at(kx % d, ky % d);
          if (!b.is_zero()) rhs.add_scaled(alg.product(ky / d, kx / d), cx * cy * b);
        }
      f3 = lhs != rhs;
    }
    if (f1 || f2 || f3) {
      std::lock_guard lock(mu);
      c1 = c1 || f1;
      c2 = c2 || f2;
      c3 = c3 || f3;
    }
  });
  if (c1) bad.push_back("r(xy⊗z) = r(x⊗z1) r(y⊗z2) fails");
  if (c2) bad.push_back("r(x⊗yz) = r(x1⊗z) r(x2⊗y) fails");
  if (c3) bad.push_back("r(x1⊗y1) x2y2 = y1x1 r(x2⊗y2) fails");
  if (!convolution_inverse(r)) bad.push_back("r is not convolution invertible");
  return bad;
}

bool is_cotriangular(const Bilinear& r) {
  return convolution(r.transposed(), r) == Bilinear::epsilon(r.domain());
}

}  // namespace en
