#include "en/brauer.hpp"

#include <set>

#include "en/rmatrix.hpp"

namespace en {

bool admissible_m(unsigned n, unsigned r, const Matrix& m) {
  if (m.rows() != n || m.cols() != n || !m.is_skew() || r > n) return false;
  for (unsigned i = n - r; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (!m(i, j).is_zero() || !m(j, i).is_zero()) return false;
  return true;
}

Matrix SymBlockMatrix::assembled() const {
  unsigned s = n - r;
  Matrix l(n, n);
  if (s && r) {
    l.set_block(0, s, l1);
    l.set_block(s, 0, l1.transpose());
  }
  if (r) l.set_block(s, s, l2);
  return l;
}

SymBlockMatrix SymBlockMatrix::from_matrix(unsigned r, const Matrix& m, const Matrix& l) {
  unsigned n = static_cast<unsigned>(l.rows());
  if (!l.is_symmetric()) throw ShapeMismatch("L must be symmetric");
  if (!admissible_m(n, r, m)) throw ShapeMismatch("M must be skew n x n with its last r rows and columns zero");
  unsigned s = n - r;
  if (!l.block(0, 0, s, s).is_zero()) throw ShapeMismatch("L must vanish on the top-left (n-r) block");
  return {n, r, m, l.block(0, s, s, r), l.block(s, s, r, r)};
}

Matrix sym_sum(const Matrix& l, const Matrix& n, const Matrix& m) {
  Matrix nml = n * m * l;
  return l + n - Scalar(2) * nml - Scalar(2) * nml.transpose();
}

namespace {

void same_group(const SymBlockMatrix& x, const SymBlockMatrix& y) {
  if (x.n != y.n || x.r != y.r || x.m != y.m) throw ShapeMismatch("elements of different groups Sym_{M,n,r}");
}

}  // namespace

SymBlockMatrix sym_pair_op(const SymBlockMatrix& x, const SymBlockMatrix& y) {
  same_group(x, y);
  unsigned s = x.n - x.r;
  SymBlockMatrix out = x;
  out.l1 = x.l1 + y.l1;
  Matrix mp = x.m.block(0, 0, s, s);
  out.l2 = x.l2 + y.l2 - Scalar(2) * (y.l1.transpose() * mp * x.l1) + Scalar(2) * (x.l1.transpose() * mp * y.l1);
  return out;
}

SymBlockMatrix sym_group_op(const SymBlockMatrix& x, const SymBlockMatrix& y) {
  same_group(x, y);
  Matrix l = x.assembled(), n = y.assembled();
  Matrix a = sym_sum(l, n, x.m);
  Matrix b = l + n - Scalar(2) * (n * x.m * l) + Scalar(2) * (l * x.m * n);
  if (a != b) throw std::logic_error("the two forms of the group law disagree");
  if (sym_pair_op(x, y).assembled() != a) throw std::logic_error("block form of the group law disagrees");
  return SymBlockMatrix::from_matrix(x.r, x.m, a);
}

SymBlockMatrix sym_inverse(const SymBlockMatrix& x) {
  SymBlockMatrix out = x;
  out.l1 = -x.l1;
  out.l2 = -x.l2;
  return out;
}

SymBlockMatrix sym_zero(unsigned n, unsigned r, const Matrix& m) {
  return SymBlockMatrix::from_matrix(r, m, Matrix(n, n));
}

CentralExtensionReport central_extension_decompose(const std::vector<SymBlockMatrix>& sample,
                                                   const std::vector<Matrix>& kernel_sample) {
  CentralExtensionReport out;
  if (sample.empty()) return out;
  const auto& g = sample.front();
  unsigned s = g.n - g.r;
  out.kernel_dim = g.r * (g.r + 1) / 2;
  out.quotient_dim = s * g.r;
  for (const auto& sm : kernel_sample) {
    SymBlockMatrix z = sym_zero(g.n, g.r, g.m);
    z.l2 = sm;
    for (const auto& x : sample) {
      SymBlockMatrix shifted = x;
      shifted.l2 = x.l2 + sm;
      auto zx = sym_group_op(z, x), xz = sym_group_op(x, z);
      if (zx.assembled() != xz.assembled()) out.violations.push_back("(0,S) is not central");
      if (zx.assembled() != shifted.assembled()) out.violations.push_back("(0,S)+(L1,L2) != (L1, L2+S)");
    }
  }
  for (const auto& x : sample)
    for (const auto& y : sample) {
      auto xy = sym_group_op(x, y);
      if (xy.l1 != x.l1 + y.l1) out.violations.push_back("projection to L1 is not additive");
      auto comm = sym_group_op(sym_group_op(xy, sym_inverse(x)), sym_inverse(y));
      if (!comm.l1.is_zero()) out.violations.push_back("commutator outside the kernel");
    }
  return out;
}

BrauerClassWitness witness_of(const ModulePtr& rep) {
  BrauerClassWitness w;
  w.representative = rep;
  unsigned n = en_rank(*rep->hopf());
  try {
    auto d = normalize_pi(inner_decomposition(*rep));
    w.alpha = d.alpha;
    w.l = d.l;
    w.strongly_inner = strongly_inner_test(d);
  } catch (const NoInnerImplementation&) {
    if (n != 0) throw;
    w.opaque = true;
    w.l = Matrix(0, 0);
  }
  return w;
}

BrauerClassWitness chi_on_representative(const HopfPtr& en, const Matrix& l) {
  return witness_of(a_sigma(build_sigma(en, -l).form));
}

ChiProductReport chi_product_check(const HopfPtr& en, const SymBlockMatrix& x, const SymBlockMatrix& y) {
  ChiProductReport out;
  out.expected = sym_group_op(x, y).assembled();
  auto a = a_sigma(build_sigma(en, -x.assembled()).form);
  auto b = a_sigma(build_sigma(en, -y.assembled()).form);
  auto d = inner_decomposition_braided(a, b, build_R(en, x.m).r);
  out.observed = d.l;
  out.alpha = d.alpha;
  return out;
}

namespace {

class ForwardingModule : public ModuleAlgebra {
 public:
  ForwardingModule(HopfPtr h, ModulePtr a) : ModuleAlgebra(std::move(h)), a_(std::move(a)) {}
  std::size_t dim() const override { return a_->dim(); }
  Elem product(Index i, Index j) const override { return a_->product(i, j); }
  Elem unit() const override { return a_->unit(); }
  std::string label(Index i) const override { return a_->label(i); }
  std::vector<Elem> generators() const override { return a_->generators(); }
  using ModuleAlgebra::act;

 protected:
  ModulePtr a_;
};

class RestrictedModule : public ForwardingModule {
 public:
  using ForwardingModule::ForwardingModule;
  // E(m) basis indices are the leading block of those of E(n).
  Elem act(Index k, Index i) const override { return a_->act(k, i); }
};

class InflatedModule : public ForwardingModule {
 public:
  InflatedModule(HopfPtr h, ModulePtr a) : ForwardingModule(std::move(h), a), m_(en_rank(*a->hopf())) {}
  Elem act(Index k, Index i) const override {
    if (en_mask(k) >> m_) return {};
    return a_->act(k, i);
  }

 private:
  unsigned m_;
};

class TwistedModule : public ForwardingModule {
 public:
  TwistedModule(ModulePtr a, const Matrix& alpha) : ForwardingModule(a->hopf(), a), alpha_(alpha) {}
  Elem act(Index k, Index i) const override {
    Elem out;
    for (std::size_t j = 0; j < alpha_.rows(); ++j)
      if (!alpha_(j, k).is_zero()) out.add_scaled(a_->act(j, i), alpha_(j, k));
    return out;
  }

 private:
  Matrix alpha_;
};

}  // namespace

ModulePtr restrict_module(const ModulePtr& a, const HopfPtr& sub) {
  if (en_rank(*sub) > en_rank(*a->hopf())) throw ShapeMismatch("restriction to a larger E(m)");
  return std::make_shared<RestrictedModule>(sub, a);
}

ModulePtr inflate_module(const ModulePtr& a, const HopfPtr& big) {
  if (en_rank(*big) < en_rank(*a->hopf())) throw ShapeMismatch("inflation to a smaller E(m)");
  return std::make_shared<InflatedModule>(big, a);
}

SplitMaps split_maps(unsigned n, unsigned r, const Matrix& m, const Field& f) {
  if (!admissible_m(n, r, m)) throw ShapeMismatch("M must be skew n x n with its last r rows and columns zero");
  SplitMaps out;
  out.small = build_en(n - r, f);
  out.big = build_en(n, f);
  auto small = out.small, big = out.big;
  out.j_star = [small](const BrauerClassWitness& w) { return witness_of(restrict_module(w.representative, small)); };
  out.p_star = [big](const BrauerClassWitness& w) { return witness_of(inflate_module(w.representative, big)); };
  return out;
}

AAlpha build_A_alpha(const HopfPtr& en, const Matrix& t) {
  const Hopf& h = *en;
  const Algebra& alg = h.alg();
  std::size_t d = h.dim();
  Matrix alpha = hopf_automorphism(h, t);
  std::vector<Elem> s_inv(d);
  for (Index k = 0; k < d; ++k) s_inv[k] = h.antipode_inverse(alg.basis(k));

  AAlpha out;
  for (Index k = 0; k < d; ++k) {
    std::vector<Elem> cols(d);
    for (Index q = 0; q < d; ++q)
      for (const auto& [ab, c] : h.delta(k))
        cols[q].add_scaled(alg.mul(alg.mul(apply(alpha, alg.basis(ab % d)), alg.basis(q)), s_inv[ab / d]), c);
    out.rep.push_back(matrix_of(cols, d, h.field()));
  }
  out.module = end_of_module(en, out.rep);

  // ρ(E_ij)(e_q) = Σ E_ij(q0)0 ⊗ S^{-1}(q1) E_ij(q0)1, only q0 = j contributing.
  out.comodule.h = en;
  out.comodule.rho.resize(d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Elem& rho = out.comodule.rho[i * d + j];
      for (Index q = 0; q < d; ++q)
        for (const auto& [t1, c1] : h.delta(q)) {
          if (t1 / d != j) continue;
          for (const auto& [t2, c2] : h.delta(i)) {
            Elem right = alg.mul(s_inv[t1 % d], alg.basis(t2 % d));
            Index f = (t2 / d) * d + q;
            for (const auto& [hh, c3] : right) rho.add(f * d + hh, c1 * c2 * c3);
          }
        }
    }
  return out;
}

namespace {

Elem tensor_square(const Elem& g, std::size_t d) {
  Elem out;
  for (const auto& [i, a] : g)
    for (const auto& [j, b] : g) out.add(i * d + j, a * b);
  return out;
}

// Rational roots of Σ c_i t^i (c over Q), or all roots by search over F_p.
std::vector<Scalar> roots(const Vector& coef, const Field& f) {
  auto eval = [&](const Scalar& t) {
    Scalar v = f.zero();
    for (std::size_t i = coef.size(); i-- > 0;) v = v * t + coef[i];
    return v;
  };
  std::vector<Scalar> out;
  if (f.p) {
    for (std::uint32_t r = 0; r < f.p; ++r)
      if (eval(f.from(static_cast<long>(r))).is_zero()) out.push_back(f.from(static_cast<long>(r)));
    return out;
  }
  mpz_class den = 1;
  for (const auto& c : coef) den = lcm(den, c.rational_value().get_den());
  std::vector<mpz_class> a;
  for (const auto& c : coef) a.push_back(mpz_class(c.rational_value() * den));
  std::size_t lo = 0;
  while (lo < a.size() && a[lo] == 0) ++lo;
  if (lo == a.size()) throw std::logic_error("zero polynomial");
  if (lo > 0) out.push_back(Scalar(0));
  std::size_t hi = a.size() - 1;
  while (a[hi] == 0) --hi;
  auto divisors = [](mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> ds;
    for (mpz_class k = 1; k * k <= v; ++k)
      if (v % k == 0) {
        ds.push_back(k);
        if (k * k != v) ds.push_back(v / k);
      }
    return ds;
  };
  std::set<std::string> seen;
  for (const auto& p : divisors(a[lo]))
    for (const auto& q : divisors(a[hi]))
      for (int sgn : {1, -1}) {
        Scalar t(mpq_class(sgn * p, q));
        if (seen.insert(t.str()).second && eval(t).is_zero()) out.push_back(t);
      }
  return out;
}

// Coefficients of det(N - tI) by interpolation at t = 0..m.
Vector char_poly(const Matrix& n, const Field& f) {
  std::size_t m = n.rows();
  Matrix v(m + 1, m + 1);
  Vector y(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    Scalar t = f.from(static_cast<long>(i));
    Scalar p = f.one();
    for (std::size_t j = 0; j <= m; ++j, p *= t) v(i, j) = p;
    y[i] = determinant(n - Matrix::identity(m, f) * t);
  }
  auto c = solve_linear(v, y);
  if (!c) throw std::logic_error("interpolation failed");
  return *c;
}

}  // namespace

std::vector<Elem> grouplikes(const Hopf& h, const std::function<unsigned(Index)>& degree) {
  std::size_t d = h.dim();
  const Field& f = h.field();
  // A grouplike has no component of positive degree: its top component g_D
  // would give g_D⊗g_D in degree 2D, which Δ(g) cannot reach unless D = 0.
  std::vector<Index> zero;
  for (Index k = 0; k < d; ++k) {
    for (const auto& [t, c] : h.delta(k))
      if (degree(t / d) + degree(t % d) != degree(k)) throw std::logic_error("basis is not a coalgebra grading");
    if (degree(k) == 0) zero.push_back(k);
  }
  std::size_t m = zero.size();
  std::map<Index, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[zero[i]] = i;
  // M_j = (id ⊗ e^j)Δ on the degree-0 part; g is a common eigenvector with
  // eigenvalues g_j.
  std::vector<Matrix> ops(m, Matrix(m, m));
  for (std::size_t k = 0; k < m; ++k)
    for (const auto& [t, c] : h.delta(zero[k])) ops[pos.at(t % d)](pos.at(t / d), k) += c;

  for (unsigned attempt = 0; attempt < 8; ++attempt) {
    Matrix n(m, m);
    for (std::size_t j = 0; j < m; ++j) n += ops[j] * f.from(static_cast<long>((attempt + 1) * j + 1 + attempt * attempt));
    std::vector<Elem> out;
    bool degenerate = false;
    for (const auto& lambda : roots(char_poly(n, f), f)) {
      auto ker = kernel(n - Matrix::identity(m, f) * lambda);
      if (ker.size() > 1) {
        degenerate = true;
        break;
      }
      Elem g;
      for (std::size_t i = 0; i < m; ++i) g.add(zero[i], ker[0][i]);
      Scalar e = h.counit(g);
      if (e.is_zero()) continue;
      g *= e.inverse();
      if (h.coproduct(g) == tensor_square(g, d)) out.push_back(std::move(g));
    }
    if (!degenerate) return out;
  }
  throw std::logic_error("could not separate grouplikes by eigenvalues");
}

bool in_g_d_dual(const Hopf& h, const Elem& g, const Elem& lambda) {
  const Algebra& alg = h.alg();
  std::size_t d = h.dim();
  for (Index k = 0; k < d; ++k) {
    Elem lhs, rhs;
    for (const auto& [t, c] : h.delta(k)) {
      lhs.add_scaled(alg.mul(g, alg.basis(t / d)), c * lambda.get(t % d));
      rhs.add_scaled(alg.mul(alg.basis(t % d), g), c * lambda.get(t / d));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

Matrix theta(const Hopf& h, const Elem& g, const Elem& lambda) {
  const Algebra& alg = h.alg();
  std::size_t d = h.dim();
  Elem g_inv = h.antipode(g);
  auto lambda_inv = [&](Index k) {
    Scalar v = h.field().zero();
    for (const auto& [i, c] : h.s(k)) v += c * lambda.get(i);
    return v;
  };
  std::vector<Elem> cols(d);
  for (Index k = 0; k < d; ++k)
    for (const auto& [t, c] : h.delta2(k)) {
      Index a = t / (d * d), b = (t / d) % d, e = t % d;
      Scalar s = c * lambda.get(a) * lambda_inv(e);
      if (s.is_zero()) continue;
      cols[k].add_scaled(alg.mul(alg.mul(g, alg.basis(b)), g_inv), s);
    }
  return matrix_of(cols, d, h.field());
}

GrouplikeData grouplike_computations(const HopfPtr& en) {
  GrouplikeData out;
  Hopf dual = dual_hopf(*en);
  out.g_h = grouplikes(*en, en_degree);
  out.g_dual = grouplikes(dual, en_degree);
  out.theta.resize(out.g_h.size());
  for (std::size_t i = 0; i < out.g_h.size(); ++i)
    for (std::size_t j = 0; j < out.g_dual.size(); ++j) {
      if (in_g_d_dual(*en, out.g_h[i], out.g_dual[j])) out.g_d_dual.emplace_back(i, j);
      out.theta[i].push_back(theta(*en, out.g_h[i], out.g_dual[j]));
    }
  return out;
}

ModulePtr twist_module(const ModulePtr& a, const Matrix& alpha) { return std::make_shared<TwistedModule>(a, alpha); }

Matrix aut_conjugation_action(const Matrix& t, const Matrix& l) {
  if (!t.square() || t.rows() != l.rows() || !l.square()) throw DimensionMismatch("T and L must be n x n");
  if (rank(t) != t.rows()) throw SingularMatrix("T must be invertible");
  return t * l * t.transpose();
}

AutActionReport aut_conjugation_check(const HopfPtr& en, const Matrix& t, const Matrix& l) {
  AutActionReport out;
  out.expected = aut_conjugation_action(t, l);
  auto a = a_sigma(build_sigma(en, -l).form);
  auto d = inner_decomposition(*a);
  auto d2 = inner_decomposition(*twist_module(a, hopf_automorphism(*en, t)));
  out.observed = d2.l;
  out.w_match = d2.u == d.u;
  for (std::size_t i = 0; i < d.w.size(); ++i) {
    Elem w;
    for (std::size_t j = 0; j < d.w.size(); ++j) w.add_scaled(d.w[j], t(i, j));
    if (w != d2.w[i]) out.w_match = false;
  }
  return out;
}

SemidirectElem semidirect_mul(const SemidirectElem& a, const SemidirectElem& b) {
  return {a.t * b.t, a.l + a.t * b.l * a.t.transpose()};
}

SemidirectElem semidirect_inverse(const SemidirectElem& a) {
  Matrix ti = inverse_or_throw(a.t);
  return {ti, -(ti * a.l * ti.transpose())};
}

bool semidirect_equal(const SemidirectElem& a, const SemidirectElem& b) {
  return (a.t == b.t || a.t == -b.t) && a.l == b.l;
}

SemidirectReport semidirect_embedding_check(const HopfPtr& en, const std::vector<SemidirectElem>& pairs) {
  SemidirectReport out;
  std::size_t n = en_rank(*en);
  const Field& f = en->field();
  Matrix id = Matrix::identity(n, f), zero(n, n);
  auto r0 = build_R(en, zero).r;
  auto a_l = [&](const Matrix& l) { return a_sigma(build_sigma(en, -l).form); };
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [t, l] = pairs[k];
    std::string tag = "pair " + std::to_string(k) + ": ";
    ++out.checked;
    auto conj = semidirect_mul(semidirect_mul({t, zero}, {id, l}), semidirect_inverse({t, zero}));
    if (!semidirect_equal(conj, {id, aut_conjugation_action(t, l)})) out.violations.push_back(tag + "conjugation law");
    if (!aut_conjugation_check(en, t, l).ok()) out.violations.push_back(tag + "A^L(T) invariants differ from T L T^t");

    const auto& next = pairs[(k + 1) % pairs.size()];
    auto prod = semidirect_mul(pairs[k], next);
    auto d = inner_decomposition_braided(a_l(l), twist_module(a_l(next.l), hopf_automorphism(*en, t)), r0);
    if (d.l != prod.l || !d.alpha.is_one()) out.violations.push_back(tag + "product invariants differ from the group law");

    bool trivial_t = t == id || t == -id;
    if (!l.is_zero() && chi_on_representative(en, l).l.is_zero())
      out.violations.push_back(tag + "nonzero L with trivial invariants");
    if (!trivial_t) {
      bool moved = false;
      for (std::size_t i = 0; i < n && !moved; ++i)
        for (std::size_t j = i; j < n && !moved; ++j) {
          Matrix e(n, n);
          e(i, j) = e(j, i) = f.one();
          moved = aut_conjugation_action(t, e) != e;
        }
      if (!moved) out.violations.push_back(tag + "T != +-Id acts trivially on Sym_n");
    }
  }
  return out;
}

}  // namespace en
