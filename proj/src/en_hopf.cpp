#include "en/en_hopf.hpp"

#include <bit>

namespace en {

namespace {

// v_S * v_t for a single generator t, as a combination of masks.
Elem mono_times_generator(const Matrix& g, std::uint64_t s, unsigned t) {
  if (s == 0) return Elem::unit(std::uint64_t{1} << t, Scalar(1));
  unsigned top = 63 - static_cast<unsigned>(std::countl_zero(s));
  std::uint64_t rest = s & ~(std::uint64_t{1} << top);
  if (top < t) return Elem::unit(s | (std::uint64_t{1} << t), Scalar(1));
  if (top == t) return Elem::unit(rest, g(t, t));
  // v_top v_t = 2 g_{top,t} - v_t v_top, and v_top is larger than everything left.
  Elem out = Elem::unit(rest, Scalar(2) * g(top, t));
  for (const auto& [u, c] : mono_times_generator(g, rest, t))
    out.add(u | (std::uint64_t{1} << top), -c);
  return out;
}

}  // namespace

Algebra clifford_algebra(const Matrix& g, const std::vector<std::string>& names) {
  if (!g.is_symmetric()) throw NotSymmetric("Clifford form must be symmetric");
  if (names.size() != g.rows()) throw DimensionMismatch("one name per generator");
  std::size_t m = names.size();
  if (m > 20) throw std::invalid_argument("too many Clifford generators");
  std::size_t d = std::size_t{1} << m;
  Field f{g.modulus()};
  std::vector<std::string> labels(d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t a = 0; a < m; ++a)
      if (k >> a & 1) labels[k] += names[a];
    if (labels[k].empty()) labels[k] = "1";
  }
  Algebra alg(f, labels);
  for (std::uint64_t s = 0; s < d; ++s)
    for (std::uint64_t t = 0; t < d; ++t) {
      Elem acc = Elem::unit(s, f.one());
      for (unsigned b = 0; b < m && !acc.empty(); ++b) {
        if (!(t >> b & 1)) continue;
        Elem next;
        for (const auto& [u, c] : acc) next.add_scaled(mono_times_generator(g, u, b), c);
        acc = std::move(next);
      }
      Elem out;
      for (const auto& [u, c] : acc) out.add(u, f.from(c));
      alg.set_product(s, t, std::move(out));
    }
  alg.set_unit(Elem::unit(0, f.one()));
  return alg;
}

std::string en_label(Index i) {
  std::string s = en_c_exp(i) ? "c" : "";
  std::uint64_t p = en_mask(i);
  for (unsigned k = 0; p; ++k, p >>= 1)
    if (p & 1) s += "x" + std::to_string(k + 1);
  return s.empty() ? "1" : s;
}

unsigned en_rank(const Hopf& h) {
  std::size_t d = h.dim();
  if (d < 2 || (d & (d - 1))) throw DimensionMismatch("not the dimension of some E(n)");
  return static_cast<unsigned>(std::countr_zero(d)) - 1;
}

Elem en_c(const Hopf& h) { return h.alg().basis(en_index(1, 0)); }

Elem en_x(const Hopf& h, unsigned i) {
  if (i == 0 || i > en_rank(h)) throw std::out_of_range("generator index out of range");
  return h.alg().basis(en_index(0, std::uint64_t{1} << (i - 1)));
}

HopfPtr build_en(unsigned n, const Field& f) {
  if (n > 12) throw std::invalid_argument("E(n) supported for n <= 12");
  Matrix g = Matrix::identity(n + 1, f) * f.zero();
  g(0, 0) = f.one();
  std::vector<std::string> names{"c"};
  for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  Algebra alg = clifford_algebra(g, names);
  std::size_t d = alg.dim();
  TensorSpace t2({&alg, &alg});

  Elem c = alg.basis(1);
  Elem delta_c = t2.pure({c, c});
  Elem s_c = c;
  std::vector<Elem> delta_x(n + 1), s_x(n + 1);
  for (unsigned i = 1; i <= n; ++i) {
    Elem x = alg.basis(en_index(0, std::uint64_t{1} << (i - 1)));
    delta_x[i] = t2.pure({alg.unit(), x}) + t2.pure({x, c});
    s_x[i] = alg.mul(c, x);
  }
  std::vector<Elem> delta(d), s(d);
  std::vector<Scalar> eps(d, f.zero());
  for (Index k = 0; k < d; ++k) {
    Elem dk = en_c_exp(k) ? delta_c : t2.one();
    Elem sk = en_c_exp(k) ? s_c : alg.unit();
    for (unsigned i = 1; i <= n; ++i) {
      if (!(en_mask(k) >> (i - 1) & 1)) continue;
      dk = t2.mul(dk, delta_x[i]);
      sk = alg.mul(s_x[i], sk);
    }
    delta[k] = std::move(dk);
    s[k] = std::move(sk);
    if (en_mask(k) == 0) eps[k] = f.one();
  }
  return std::make_shared<const Hopf>(std::move(alg), std::move(delta), std::move(eps), std::move(s));
}

Elem apply(const Matrix& m, const Elem& a) {
  Elem out;
  for (const auto& [j, c] : a)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) out.add(i, m(i, j) * c);
  return out;
}

Matrix matrix_of(const std::vector<Elem>& images, std::size_t rows, const Field& f) {
  Matrix m = Matrix::zero(rows, images.size());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < images.size(); ++j) m(i, j) = f.zero();
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [i, c] : images[j]) m(i, j) = c;
  return m;
}

DualityIso duality_iso(const HopfPtr& en) {
  const Hopf& h = *en;
  unsigned n = en_rank(h);
  auto dual = std::make_shared<const Hopf>(dual_hopf(h));
  const Algebra& da = dual->alg();
  const Field& f = h.field();
  Elem phi_c = da.basis(0) - da.basis(1);
  std::vector<Elem> phi_x(n + 1);
  for (unsigned j = 1; j <= n; ++j) {
    std::uint64_t m = std::uint64_t{1} << (j - 1);
    phi_x[j] = da.basis(en_index(0, m)) + da.basis(en_index(1, m));
  }
  std::vector<Elem> images(h.dim());
  for (Index k = 0; k < h.dim(); ++k) {
    Elem v = en_c_exp(k) ? phi_c : da.unit();
    for (unsigned j = 1; j <= n; ++j)
      if (en_mask(k) >> (j - 1) & 1) v = da.mul(v, phi_x[j]);
    images[k] = std::move(v);
  }
  Matrix phi = matrix_of(images, h.dim(), f);
  return {dual, phi, inverse_or_throw(phi)};
}

Matrix hopf_automorphism(const Hopf& en, const Matrix& t) {
  unsigned n = en_rank(en);
  if (t.rows() != n || t.cols() != n) throw DimensionMismatch("automorphism matrix must be n x n");
  if (rank(t) != n) throw SingularMatrix("automorphism matrix must be invertible");
  const Algebra& a = en.alg();
  std::vector<Elem> img_x(n + 1);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) img_x[i].add_scaled(en_x(en, j), t(i - 1, j - 1));
  std::vector<Elem> images(en.dim());
  for (Index k = 0; k < en.dim(); ++k) {
    Elem v = en_c_exp(k) ? en_c(en) : a.unit();
    for (unsigned i = 1; i <= n; ++i)
      if (en_mask(k) >> (i - 1) & 1) v = a.mul(v, img_x[i]);
    images[k] = std::move(v);
  }
  return matrix_of(images, en.dim(), en.field());
}

}  // namespace en
