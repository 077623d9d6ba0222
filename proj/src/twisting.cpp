#include "en/twisting.hpp"

#include <bit>
#include <map>
#include <mutex>

#include "en/parallel.hpp"

namespace en {

namespace {

void require_n_by_n(const Hopf& en, const Matrix& m) {
  unsigned n = en_rank(en);
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch("parameter matrix must be n x n");
}

Index unit_index(const Hopf& h) { return h.alg().unit().begin()->first; }

// Value of ω on x_P⊗x_Q for |P| = |Q|, by expanding the smallest index of P.
class OmegaRecurrence {
 public:
  explicit OmegaRecurrence(const Matrix& m) : m_(m) {}

  Scalar operator()(std::uint64_t p, std::uint64_t q) {
    if (std::popcount(p) != std::popcount(q)) return Scalar();
    if (p == 0) return Scalar(1);
    auto key = std::make_pair(p, q);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    unsigned i = static_cast<unsigned>(std::countr_zero(p));
    std::uint64_t rest = p & (p - 1);
    int t = std::popcount(q);
    Scalar total;
    int j = 0;
    for (unsigned qj = 0; qj < 64 && (q >> qj); ++qj) {
      if (!(q >> qj & 1)) continue;
      ++j;
      if (i > qj) continue;  // m is upper triangular
      const Scalar& mij = m_(i, qj);
      if (mij.is_zero()) continue;
      Scalar sub = (*this)(rest, q & ~(std::uint64_t{1} << qj));
      total += Scalar((t - j) % 2 ? -1 : 1) * mij * sub;
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  const Matrix& m_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Scalar> memo_;
};

struct Delta2Term {
  Index a, b, c;
  Scalar coef;
};

std::vector<std::vector<Delta2Term>> delta2_terms(const Hopf& h) {
  std::size_t d = h.dim();
  std::vector<std::vector<Delta2Term>> out(d);
  for (Index i = 0; i < d; ++i)
    for (const auto& [k, c] : h.delta2(i)) out[i].push_back({k / (d * d), (k / d) % d, k % d, c});
  return out;
}

Scalar eval_on(const Bilinear& f, const Elem& a, Index b) {
  Scalar s;
  for (const auto& [k, c] : a) s += c * f.at(k, b);
  return s;
}

Scalar eval_on(const Bilinear& f, Index a, const Elem& b) {
  Scalar s;
  for (const auto& [k, c] : b) s += c * f.at(a, k);
  return s;
}

}  // namespace

LazyCocycle build_omega(const HopfPtr& en, const Matrix& m) {
  require_n_by_n(*en, m);
  unsigned n = en_rank(*en);
  std::size_t d = en->dim();
  const Field& f = en->field();
  Matrix upper(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) upper(i, j) = f.from(m(i, j));
  OmegaRecurrence rec(upper);
  Matrix table = Matrix::identity(d, f) * f.zero();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      if (en_degree(i) != en_degree(j)) continue;
      Scalar v = f.from(rec(en_mask(i), en_mask(j)));
      if (en_c_exp(j) && en_degree(i) % 2) v = -v;
      table(i, j) = v;
    }
  return {en, upper, false, Bilinear(en, table)};
}

Functional sigma_gauge(const HopfPtr& en, const Matrix& l) {
  require_n_by_n(*en, l);
  unsigned n = en_rank(*en);
  // φ(1 + Σ l_ij x_i x_j); even c-free monomials are central in E(n).
  Elem z = en->alg().unit();
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      z.add(en_index(0, (std::uint64_t{1} << i) | (std::uint64_t{1} << j)), en->field().from(l(i, j)));
  Elem values = apply(duality_iso(en).phi, z);
  Functional theta{en, Vector(en->dim(), en->field().zero())};
  for (const auto& [k, c] : values) theta.values[k] = c;
  return theta;
}

LazyCocycle build_sigma(const HopfPtr& en, const Matrix& l) {
  require_n_by_n(*en, l);
  if (!l.is_symmetric()) throw NotSymmetric("build_sigma needs a symmetric matrix");
  unsigned n = en_rank(*en);
  Matrix m(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) m(i, j) = i == j ? l(i, j) : Scalar(2) * l(i, j);
  Bilinear omega = build_omega(en, m).form;
  Matrix lf = l;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) lf(i, j) = en->field().from(l(i, j));
  return {en, lf, true, cohomologous_twist(omega, sigma_gauge(en, l))};
}

Bilinear cohomologous_twist(const Bilinear& sigma, const Functional& theta) {
  const Hopf& h = *sigma.domain();
  if (theta.domain != sigma.domain()) throw DomainMismatch("gauge on a different Hopf algebra");
  auto inv = convolution_inverse(theta);
  if (!inv) throw std::domain_error("gauge functional is not convolution invertible");
  std::size_t d = h.dim();
  const Algebra& a = h.alg();
  Matrix tinv(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) tinv(i, j) = (*inv)(a.product(i, j));
  auto terms = delta2_terms(h);
  Matrix out(d, d);
  parallel_for(d, [&](std::size_t i) {
    for (Index j = 0; j < d; ++j) {
      Scalar s = h.field().zero();
      for (const auto& x : terms[i]) {
        const Scalar& tx = theta.values[x.a];
        if (tx.is_zero()) continue;
        for (const auto& y : terms[j]) {
          const Scalar& ty = theta.values[y.a];
          if (ty.is_zero()) continue;
          const Scalar& sv = sigma.at(x.b, y.b);
          if (sv.is_zero()) continue;
          s += x.coef * y.coef * tx * ty * sv * tinv(x.c, y.c);
        }
      }
      out(i, j) = s;
    }
  });
  return {sigma.domain(), out};
}

std::vector<std::string> check_cocycle(const Bilinear& sigma) {
  const Hopf& h = *sigma.domain();
  const Algebra& a = h.alg();
  std::size_t d = h.dim();
  std::mutex mu;
  std::vector<std::string> bad;
  parallel_for(d, [&](std::size_t g) {
    for (Index x = 0; x < d; ++x)
      for (Index m = 0; m < d; ++m) {
        Scalar lhs, rhs;
        for (const auto& [kg, cg] : h.delta(g))
          for (const auto& [kx, cx] : h.delta(x)) {
            const Scalar& s1 = sigma.at(kg / d, kx / d);
            if (s1.is_zero()) continue;
            lhs += cg * cx * s1 * eval_on(sigma, a.product(kg % d, kx % d), m);
          }
        for (const auto& [kx, cx] : h.delta(x))
          for (const auto& [km, cm] : h.delta(m)) {
            const Scalar& s1 = sigma.at(kx / d, km / d);
            if (s1.is_zero()) continue;
            rhs += cx * cm * s1 * eval_on(sigma, g, a.product(kx % d, km % d));
          }
        if (lhs != rhs) {
          std::lock_guard lock(mu);
          if (bad.empty())
            bad.push_back("cocycle identity fails on (" + a.labels()[g] + ", " + a.labels()[x] +
                          ", " + a.labels()[m] + ")");
          return;
        }
      }
  });
  return bad;
}

std::vector<std::string> check_lazy(const Bilinear& sigma) {
  const Hopf& h = *sigma.domain();
  const Algebra& a = h.alg();
  std::size_t d = h.dim();
  for (Index x = 0; x < d; ++x)
    for (Index y = 0; y < d; ++y) {
      Elem lhs, rhs;
      for (const auto& [kx, cx] : h.delta(x))
        for (const auto& [ky, cy] : h.delta(y)) {
          const Scalar& s1 = sigma.at(kx / d, ky / d);
          if (!s1.is_zero()) lhs.add_scaled(a.product(kx % d, ky % d), cx * cy * s1);
          const Scalar& s2 = sigma.at(kx % d, ky % d);
          if (!s2.is_zero()) rhs.add_scaled(a.product(kx / d, ky / d), cx * cy * s2);
        }
      if (lhs != rhs)
        return {"laziness fails on (" + a.labels()[x] + ", " + a.labels()[y] + ")"};
    }
  return {};
}

std::vector<std::string> check_normalized(const Bilinear& sigma) {
  const Hopf& h = *sigma.domain();
  Index one = unit_index(h);
  for (Index i = 0; i < h.dim(); ++i)
    if (sigma.at(one, i) != h.eps(i) || sigma.at(i, one) != h.eps(i))
      return {"not normalized at " + h.alg().labels()[i]};
  return {};
}

Algebra twisted_product(const Bilinear& sigma) {
  const Hopf& h = *sigma.domain();
  auto inv = convolution_inverse(sigma);
  if (!inv) throw std::domain_error("cocycle is not convolution invertible");
  const Algebra& a = h.alg();
  std::size_t d = h.dim();
  auto terms = delta2_terms(h);
  Algebra out(a.field(), a.labels());
  std::vector<Elem> products(d * d);
  parallel_for(d, [&](std::size_t i) {
    for (Index j = 0; j < d; ++j) {
      Elem p;
      for (const auto& x : terms[i])
        for (const auto& y : terms[j]) {
          const Scalar& s = sigma.at(x.a, y.a);
          if (s.is_zero()) continue;
          const Scalar& t = inv->at(x.c, y.c);
          if (t.is_zero()) continue;
          p.add_scaled(a.product(x.b, y.b), x.coef * y.coef * s * t);
        }
      products[i * d + j] = std::move(p);
    }
  });
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) out.set_product(i, j, std::move(products[i * d + j]));
  out.set_unit(a.unit());
  return out;
}

bool is_central(const Functional& theta) {
  const Hopf& h = *theta.domain;
  std::size_t d = h.dim();
  // θ * e^k - e^k * θ evaluated at e_i.
  for (Index i = 0; i < d; ++i) {
    std::vector<Scalar> diff(d);
    for (const auto& [k, c] : h.delta(i)) {
      diff[k % d] += c * theta.values[k / d];
      diff[k / d] -= c * theta.values[k % d];
    }
    for (const auto& v : diff)
      if (!v.is_zero()) return false;
  }
  return true;
}

TwistResult act_on_r(const Bilinear& sigma, const CoQTStructure& r) {
  if (sigma.domain() != r.form.domain()) throw DomainMismatch("cocycle and form on different algebras");
  auto inv = convolution_inverse(sigma);
  if (!inv) throw std::domain_error("cocycle is not convolution invertible");
  Bilinear form = convolution(convolution(sigma.transposed(), r.form), *inv);
  Matrix lambda = restrict_to_generators(sigma);
  Matrix b = r.a - (lambda + lambda.transpose());
  return {b, form};
}

Bilinear act_by_automorphism(const Bilinear& r, const Matrix& t) {
  const Hopf& h = *r.domain();
  Matrix p = hopf_automorphism(h, inverse_or_throw(t));
  return {r.domain(), p.transpose() * r.matrix() * p};
}

std::optional<OrbitWitness> zl_orbit_equivalent(const HopfPtr& en, const Matrix& a, const Matrix& b) {
  Matrix diff = a - b;
  if (!diff.is_symmetric()) return std::nullopt;
  Matrix s = diff * en->field().from(Scalar::rational(1, 2));
  LazyCocycle w = build_sigma(en, s);
  auto moved = act_on_r(w.form, build_r(en, a));
  if (moved.b != b || moved.form != build_r(en, b).form)
    throw std::logic_error("orbit witness failed verification");
  return OrbitWitness{s, std::move(w)};
}

OrbitLabel h_orbit_label(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("orbit label needs a square matrix");
  Field f{a.modulus()};
  Matrix skew = (a - a.transpose()) * f.from(Scalar::rational(1, 2));
  auto form = skew_canonical_form(skew);
  Matrix c = form.t.transpose() * standard_skew_form(a.rows(), form.l, f) * form.t;
  return {form.l, form.t, c - a};
}

bool verify_orbit_label(const Matrix& a, const OrbitLabel& label) {
  Field f{a.modulus()};
  Matrix c = label.t.transpose() * standard_skew_form(a.rows(), label.l, f) * label.t;
  return rank(label.t) == a.rows() && (c - a).is_symmetric() && c - a == label.sym_remainder;
}

}  // namespace en
