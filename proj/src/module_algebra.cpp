#include "en/module_algebra.hpp"

#include <array>
#include <bit>
#include <mutex>

#include "en/parallel.hpp"

namespace en {

namespace {

constexpr std::size_t kMaxReport = 20;

struct Report {
  std::vector<std::string> lines;
  std::mutex mu;
  void add(std::string s) {
    std::lock_guard lock(mu);
    if (lines.size() < kMaxReport) lines.push_back(std::move(s));
  }
};

const std::string& hlabel(const Hopf& h, Index k) { return h.alg().labels()[k]; }

// Index of the basis element x_i (1-based) and c of E(n).
Index x_index(unsigned i) { return en_index(0, std::uint64_t{1} << (i - 1)); }
constexpr Index kC = 1;

// Scalar s with a == s * unit, if any.
std::optional<Scalar> as_scalar(const Elem& a, const Elem& unit) {
  if (a.empty()) return Scalar();
  auto [i, c] = *unit.begin();
  Scalar s = a.get(i) / c;
  if (a == unit * s) return s;
  return std::nullopt;
}

Elem tensor(const Elem& x, const Elem& y, std::size_t dim_y) {
  Elem out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out.add(i * dim_y + j, a * b);
  return out;
}

// E_00 and the cyclic shift generate the full matrix algebra.
std::vector<Elem> matrix_generators(std::size_t m, const Field& f) {
  Elem e00 = Elem::unit(0, f.one());
  if (m == 1) return {e00};
  Elem shift;
  for (std::size_t i = 0; i < m; ++i) shift.add(((i + 1) % m) * m + i, f.one());
  return {e00, shift};
}

// Operator of the basis monomial c^a x_P, given the operators of c and x_i.
template <class Op, class Mul>
Op monomial_operator(Index k, const Op& one, const Op& c, const std::vector<Op>& x, Mul mul) {
  Op op = en_c_exp(k) ? c : one;
  std::uint64_t p = en_mask(k);
  for (unsigned b = 0; p; ++b, p >>= 1)
    if (p & 1) op = mul(op, x[b]);
  return op;
}

using Column = std::vector<std::pair<Index, Scalar>>;

// Solves Σ_k z_k cols[k] = rhs, returning particular + kernel.
std::optional<LinearSystem::Solution> solve_columns(const std::vector<Column>& cols, const Column& rhs) {
  std::map<Index, SparseVec> rows;
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (const auto& [r, c] : cols[k]) rows[r].add(k, c);
  std::map<Index, Scalar> rhs_of;
  for (const auto& [r, c] : rhs) {
    rows[r];
    rhs_of[r] = c;
  }
  // Short rows first keeps fill-in down.
  std::vector<std::pair<std::size_t, Index>> order;
  for (const auto& [r, row] : rows) order.emplace_back(row.size(), r);
  std::sort(order.begin(), order.end());
  LinearSystem sys(cols.size());
  for (const auto& [sz, r] : order) {
    auto it = rhs_of.find(r);
    sys.add_equation(rows[r], it == rhs_of.end() ? Scalar() : it->second);
    if (!sys.consistent()) return std::nullopt;
  }
  return sys.solve();
}

// Solves P_g z - z Q_g = rhs_g for all g, returning particular + kernel.
std::optional<LinearSystem::Solution> solve_sandwich(const ModuleAlgebra& m, const std::vector<Elem>& p,
                                                     const std::vector<Elem>& q,
                                                     const std::vector<Elem>& rhs) {
  std::size_t n = m.dim();
  std::vector<Column> cols(n);
  parallel_for(n, [&](std::size_t k) {
    Elem e = m.basis(k);
    for (std::size_t t = 0; t < p.size(); ++t) {
      Elem v = m.mul(p[t], e) - m.mul(e, q[t]);
      for (const auto& [i, c] : v) cols[k].emplace_back(t * n + i, c);
    }
  });
  Column r;
  for (std::size_t t = 0; t < rhs.size(); ++t)
    for (const auto& [i, c] : rhs[t]) r.emplace_back(t * n + i, c);
  return solve_columns(cols, r);
}

Elem from_vector(const Vector& v) {
  Elem out;
  for (std::size_t i = 0; i < v.size(); ++i) out.add(i, v[i]);
  return out;
}

bool canonical_sign(const Scalar& s) {
  if (s.modulus()) return 2 * s.residue() < static_cast<std::int64_t>(s.modulus());
  return s.rational_value() > 0;
}

}  // namespace

Algebra matrix_algebra(std::size_t m, const Field& f) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) labels.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
  Algebra alg(f, labels);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) alg.add_product(i * m + j, j * m + k, i * m + k, f.one());
  Elem one;
  for (std::size_t i = 0; i < m; ++i) one.add(i * m + i, f.one());
  alg.set_unit(one);
  return alg;
}

Elem matrix_element(const Matrix& a) {
  Elem out;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.add(i * a.cols() + j, a(i, j));
  return out;
}


std::vector<Elem> ModuleAlgebra::generators() const {
  std::vector<Elem> out;
  for (Index i = 0; i < dim(); ++i) out.push_back(basis(i));
  return out;
}

Elem ModuleAlgebra::mul(const Elem& a, const Elem& b) const {
  Elem out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out.add_scaled(product(i, j), x * y);
  return out;
}

Elem ModuleAlgebra::act(Index k, const Elem& a) const {
  Elem out;
  for (const auto& [i, x] : a) out.add_scaled(act(k, i), x);
  return out;
}

Elem ModuleAlgebra::act(const Elem& h, const Elem& a) const {
  Elem out;
  for (const auto& [k, x] : h) out.add_scaled(act(k, a), x);
  return out;
}

std::string ModuleAlgebra::format(const Elem& a) const {
  if (a.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : a) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")" + label(i);
  }
  return s;
}

TableModule::TableModule(HopfPtr h, Algebra alg, std::vector<std::vector<Elem>> action,
                         std::vector<Elem> generators)
    : ModuleAlgebra(std::move(h)), alg_(std::move(alg)), action_(std::move(action)), gens_(std::move(generators)) {
  if (action_.size() != hopf()->dim()) throw DimensionMismatch("one action column set per basis element of H");
  for (const auto& cols : action_)
    if (cols.size() != alg_.dim()) throw DimensionMismatch("action column count must equal dim A");
}

std::vector<Elem> TableModule::generators() const {
  return gens_.empty() ? ModuleAlgebra::generators() : gens_;
}

ModulePtr trivial_module(const HopfPtr& h, Algebra alg) {
  std::vector<std::vector<Elem>> action(h->dim(), std::vector<Elem>(alg.dim()));
  for (Index k = 0; k < h->dim(); ++k)
    for (Index i = 0; i < alg.dim(); ++i) action[k][i] = alg.basis(i) * h->eps(k);
  return std::make_shared<TableModule>(h, std::move(alg), std::move(action));
}

ModulePtr module_from_generators(const HopfPtr& en, Algebra alg, const Matrix& c, const std::vector<Matrix>& x) {
  unsigned n = en_rank(*en);
  if (x.size() != n) throw DimensionMismatch("one operator per x_i");
  std::size_t d = alg.dim();
  auto ops = en_representation(*en, c, x);
  std::vector<std::vector<Elem>> action(en->dim(), std::vector<Elem>(d));
  for (Index k = 0; k < en->dim(); ++k)
    for (Index i = 0; i < d; ++i) action[k][i] = apply(ops[k], alg.basis(i));
  return std::make_shared<TableModule>(en, std::move(alg), std::move(action));
}

std::vector<Matrix> en_representation(const Hopf& en, const Matrix& c, const std::vector<Matrix>& x) {
  std::size_t d = c.rows();
  Matrix one = Matrix::identity(d, en.field());
  std::vector<Matrix> ops(en.dim());
  for (Index k = 0; k < en.dim(); ++k)
    ops[k] = monomial_operator(k, one, c, x, [](const Matrix& a, const Matrix& b) { return a * b; });
  return ops;
}

std::shared_ptr<const TableModule> materialize(const ModuleAlgebra& m) {
  std::vector<std::string> labels;
  for (Index i = 0; i < m.dim(); ++i) labels.push_back(m.label(i));
  Algebra alg(m.field(), labels);
  for (Index i = 0; i < m.dim(); ++i)
    for (Index j = 0; j < m.dim(); ++j) alg.set_product(i, j, m.product(i, j));
  alg.set_unit(m.unit());
  std::vector<std::vector<Elem>> action(m.hopf()->dim(), std::vector<Elem>(m.dim()));
  for (Index k = 0; k < m.hopf()->dim(); ++k)
    for (Index i = 0; i < m.dim(); ++i) action[k][i] = m.act(k, i);
  return std::make_shared<TableModule>(m.hopf(), std::move(alg), std::move(action), m.generators());
}

std::vector<std::string> check_module_algebra(const ModuleAlgebra& m, const std::vector<Elem>& elems) {
  const Hopf& h = *m.hopf();
  std::size_t d = h.dim();
  std::vector<Elem> es = elems.empty() ? m.ModuleAlgebra::generators() : elems;
  Report report;
  Elem one = m.unit();
  parallel_for(d, [&](std::size_t k) {
    if (m.act(k, one) != one * h.eps(k)) report.add("unit not preserved at h = " + hlabel(h, k));
    for (const auto& a : es)
      for (const auto& b : es) {
        Elem lhs = m.act(k, m.mul(a, b));
        Elem rhs;
        for (const auto& [t, c] : h.delta(k)) rhs.add_scaled(m.mul(m.act(t / d, a), m.act(t % d, b)), c);
        if (lhs != rhs)
          report.add("module-algebra fails at h = " + hlabel(h, k) + ", a = " + m.format(a) + ", b = " + m.format(b));
      }
    for (Index l = 0; l < d; ++l)
      for (const auto& a : es) {
        Elem lhs;
        for (const auto& [t, c] : h.alg().product(k, l)) lhs.add_scaled(m.act(t, a), c);
        if (lhs != m.act(k, m.act(l, a)))
          report.add("action law fails at h = " + hlabel(h, k) + ", l = " + hlabel(h, l) + ", a = " + m.format(a));
      }
  });
  return std::move(report.lines);
}

std::vector<std::string> check_associative(const ModuleAlgebra& m, const std::vector<Elem>& elems) {
  std::vector<Elem> es = elems.empty() ? m.ModuleAlgebra::generators() : elems;
  Report report;
  Elem one = m.unit();
  parallel_for(es.size(), [&](std::size_t i) {
    const Elem& a = es[i];
    if (m.mul(one, a) != a || m.mul(a, one) != a) report.add("unit fails at " + m.format(a));
    for (const auto& b : es) {
      Elem ab = m.mul(a, b);
      for (const auto& c : es)
        if (m.mul(ab, c) != m.mul(a, m.mul(b, c)))
          report.add("associativity fails at " + m.format(a) + ", " + m.format(b) + ", " + m.format(c));
    }
  });
  return std::move(report.lines);
}

ModulePtr inner_end(const HopfPtr& h, const std::vector<Matrix>& pi, const std::vector<Matrix>& pi_inverse) {
  std::size_t d = h->dim();
  if (pi.size() != d || pi_inverse.size() != d) throw DimensionMismatch("pi is given on the basis of H");
  std::size_t m = pi[0].rows();
  const Field& f = h->field();
  Algebra alg = matrix_algebra(m, f);
  std::vector<std::vector<Elem>> action(d, std::vector<Elem>(m * m));
  parallel_for(d, [&](std::size_t k) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Elem out;
        for (const auto& [t, c] : h->delta(k)) {
          const Matrix& a = pi[t / d];
          const Matrix& b = pi_inverse[t % d];
          // (a E_ij b)_{rs} = a_ri b_js
          for (std::size_t r = 0; r < m; ++r) {
            if (a(r, i).is_zero()) continue;
            for (std::size_t s = 0; s < m; ++s)
              if (!b(j, s).is_zero()) out.add(r * m + s, c * a(r, i) * b(j, s));
          }
        }
        action[k][i * m + j] = std::move(out);
      }
  });
  return std::make_shared<TableModule>(h, std::move(alg), std::move(action), matrix_generators(m, f));
}

ModulePtr end_of_module(const HopfPtr& h, const std::vector<Matrix>& rep) {
  std::vector<Matrix> inv(h->dim());
  for (Index k = 0; k < h->dim(); ++k) {
    inv[k] = rep[0] * h->field().zero();
    for (const auto& [t, c] : h->s(k)) inv[k] += rep[t] * c;
  }
  return inner_end(h, rep, inv);
}

CliffordAlgebra build_clifford(unsigned n, const Matrix& l) {
  Field f{l.modulus()};
  return build_clifford(f.one(), Vector(n, f.zero()), l);
}

CliffordAlgebra build_clifford(const Scalar& alpha, const Vector& mu, const Matrix& l) {
  if (!l.is_symmetric()) throw NotSymmetric("L must be symmetric");
  unsigned n = static_cast<unsigned>(l.rows());
  if (mu.size() != n) throw DimensionMismatch("mu has one entry per generator v_i");
  Matrix g(n + 1, n + 1);
  g(0, 0) = alpha;
  for (unsigned i = 0; i < n; ++i) {
    g(0, i + 1) = g(i + 1, 0) = mu[i];
    for (unsigned j = 0; j < n; ++j) g(i + 1, j + 1) = l(i, j);
  }
  std::vector<std::string> names{"u"};
  for (unsigned i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  return {n, l, alpha, mu, clifford_algebra(g, names)};
}

Comodule clifford_coaction(const CliffordAlgebra& cl, const HopfPtr& en) {
  if (en_rank(*en) != cl.n) throw DimensionMismatch("Cl(L) and E(n) must have the same n");
  const Algebra& a = cl.alg;
  TensorSpace t({&a, &en->alg()});
  Elem rho_u = t.pure({a.basis(1), en_c(*en)});
  std::vector<Elem> rho_v;
  for (unsigned j = 1; j <= cl.n; ++j)
    rho_v.push_back(t.pure({a.unit(), en_x(*en, j)}) + t.pure({a.basis(en_index(0, std::uint64_t{1} << (j - 1))), en_c(*en)}));
  Comodule out{en, std::vector<Elem>(a.dim())};
  for (Index k = 0; k < a.dim(); ++k)
    out.rho[k] = monomial_operator(k, t.one(), rho_u, rho_v, [&](const Elem& x, const Elem& y) { return t.mul(x, y); });
  return out;
}

std::vector<std::string> check_comodule_algebra(const Algebra& alg, const Comodule& rho, bool op) {
  const Hopf& h = *rho.h;
  std::size_t dh = h.dim(), da = alg.dim();
  std::vector<std::string> out;
  auto note = [&](std::string s) {
    if (out.size() < kMaxReport) out.push_back(std::move(s));
  };
  const Algebra& ha = h.alg();
  // A⊗H with H or H^op as second factor.
  auto mul = [&](const Elem& x, const Elem& y) {
    Elem r;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) {
        Elem left = alg.product(i / dh, j / dh);
        Elem right = op ? ha.product(j % dh, i % dh) : ha.product(i % dh, j % dh);
        r.add_scaled(tensor(left, right, dh), a * b);
      }
    return r;
  };
  auto rho_of = [&](const Elem& a) {
    Elem r;
    for (const auto& [i, c] : a) r.add_scaled(rho.rho[i], c);
    return r;
  };
  for (Index i = 0; i < da; ++i) {
    Elem counit;
    Elem lhs, rhs;
    for (const auto& [t, c] : rho.rho[i]) {
      counit.add(t / dh, c * h.eps(t % dh));
      for (const auto& [s, e] : rho.rho[t / dh]) lhs.add((s * dh + t % dh), c * e);
      for (const auto& [s, e] : h.delta(t % dh)) rhs.add((t / dh) * dh * dh + s, c * e);
    }
    if (counit != alg.basis(i)) note("counit fails at " + alg.labels()[i]);
    if (lhs != rhs) note("coassociativity fails at " + alg.labels()[i]);
    for (Index j = 0; j < da; ++j)
      if (rho_of(alg.product(i, j)) != mul(rho.rho[i], rho.rho[j]))
        note("multiplicativity fails at " + alg.labels()[i] + ", " + alg.labels()[j]);
  }
  if (rho_of(alg.unit()) != tensor(alg.unit(), ha.unit(), dh)) note("rho(1) != 1⊗1");
  return out;
}

Comodule coaction_from_action(const ModuleAlgebra& m, const Elem& r) {
  std::size_t d = m.hopf()->dim();
  Comodule out{m.hopf(), std::vector<Elem>(m.dim())};
  for (Index i = 0; i < m.dim(); ++i)
    for (const auto& [t, c] : r) out.rho[i].add_scaled(tensor(m.act(t % d, i), Elem::unit(t / d, c), d), Scalar(1));
  return out;
}

ModulePtr action_from_coaction(const Algebra& alg, const Comodule& rho, const Bilinear& r) {
  // With r(x⊗yz) = r(x1⊗z) r(x2⊗y), the rule h·a = Σ r(h⊗a1) a0 is an
  // E(n)^cop-module algebra. Precomposing with the Hopf isomorphism
  // E(n) → E(n)^cop, c ↦ c, x_i ↦ c x_i, gives an E(n)-module algebra.
  const HopfPtr& en = rho.h;
  unsigned n = en_rank(*en);
  std::size_t dh = en->dim();
  // Operators on A of c and x_i, acting through ψ.
  auto op_of = [&](const Elem& h) {
    Matrix op(alg.dim(), alg.dim());
    for (Index i = 0; i < alg.dim(); ++i)
      for (const auto& [t, c] : rho.rho[i]) {
        Scalar v = r(h, Elem::unit(t % dh, en->field().one()));
        if (!v.is_zero()) op(t / dh, i) += c * v;
      }
    return op;
  };
  Matrix c_action = op_of(en_c(*en));
  std::vector<Matrix> x_action;
  for (unsigned j = 1; j <= n; ++j) x_action.push_back(op_of(en->alg().mul(en_c(*en), en_x(*en, j))));
  return module_from_generators(en, alg, c_action, x_action);
}

namespace {

struct RTerm {
  Index first, second;
  Scalar coef;
};

std::vector<RTerm> r_terms(const Elem& r, std::size_t d) {
  std::vector<RTerm> out;
  for (const auto& [t, c] : r) out.push_back({t / d, t % d, c});
  return out;
}

class BraidedProduct : public ModuleAlgebra {
 public:
  BraidedProduct(ModulePtr a, ModulePtr b, const Elem& r)
      : ModuleAlgebra(a->hopf()), a_(std::move(a)), b_(std::move(b)), r_(r_terms(r, hopf()->dim())) {
    if (a_->hopf()->dim() != b_->hopf()->dim() || a_->field() != b_->field()) throw DomainMismatch("braided product needs one Hopf algebra");
  }
  std::size_t dim() const override { return a_->dim() * b_->dim(); }
  Elem product(Index i, Index j) const override {
    std::size_t db = b_->dim();
    Elem a = a_->basis(i / db), a2 = a_->basis(j / db);
    Elem b = b_->basis(i % db), b2 = b_->basis(j % db);
    Elem out;
    for (const auto& t : r_) {
      Elem left = a_->mul(a, a_->act(t.second, a2));
      if (left.empty()) continue;
      Elem right = b_->mul(b_->act(t.first, b), b2);
      out.add_scaled(tensor(left, right, db), t.coef);
    }
    return out;
  }
  Elem unit() const override { return tensor(a_->unit(), b_->unit(), b_->dim()); }
  Elem act(Index k, Index i) const override {
    std::size_t d = hopf()->dim(), db = b_->dim();
    Elem out;
    for (const auto& [t, c] : hopf()->delta(k))
      out.add_scaled(tensor(a_->act(t / d, i / db), b_->act(t % d, i % db), db), c);
    return out;
  }
  std::string label(Index i) const override {
    return a_->label(i / b_->dim()) + "#" + b_->label(i % b_->dim());
  }
  std::vector<Elem> generators() const override {
    std::vector<Elem> out;
    for (const auto& g : a_->generators()) out.push_back(tensor(g, b_->unit(), b_->dim()));
    for (const auto& g : b_->generators()) out.push_back(tensor(a_->unit(), g, b_->dim()));
    return out;
  }
  using ModuleAlgebra::act;

 private:
  ModulePtr a_, b_;
  std::vector<RTerm> r_;
};

class HOpposite : public ModuleAlgebra {
 public:
  HOpposite(ModulePtr a, const Elem& r) : ModuleAlgebra(a->hopf()), a_(std::move(a)), r_(r_terms(r, hopf()->dim())) {}
  std::size_t dim() const override { return a_->dim(); }
  Elem product(Index i, Index j) const override {
    Elem out;
    for (const auto& t : r_) out.add_scaled(a_->mul(a_->act(t.second, j), a_->act(t.first, i)), t.coef);
    return out;
  }
  Elem unit() const override { return a_->unit(); }
  Elem act(Index k, Index i) const override { return a_->act(k, i); }
  std::string label(Index i) const override { return a_->label(i) + "'"; }
  using ModuleAlgebra::act;

 private:
  ModulePtr a_;
  std::vector<RTerm> r_;
};

}  // namespace

ModulePtr braided_product(const ModulePtr& a, const ModulePtr& b, const Elem& r) {
  return std::make_shared<BraidedProduct>(a, b, r);
}

ModulePtr h_opposite(const ModulePtr& a, const Elem& r) { return std::make_shared<HOpposite>(a, r); }

Elem braiding(const ModuleAlgebra& a, const ModuleAlgebra& b, const Elem& r, const Elem& x, const Elem& y) {
  std::size_t d = a.hopf()->dim();
  Elem out;
  for (const auto& t : r_terms(r, d)) out.add_scaled(tensor(b.act(t.second, y), a.act(t.first, x), a.dim()), t.coef);
  return out;
}

Matrix azumaya_f(const ModuleAlgebra& a, const Elem& r) {
  std::size_t n = a.dim(), d = a.hopf()->dim();
  auto terms = r_terms(r, d);
  Matrix out(n * n, n * n);
  parallel_for(n, [&](std::size_t i) {
    Elem ei = a.basis(i);
    for (Index j = 0; j < n; ++j)
      for (Index c = 0; c < n; ++c) {
        Elem v;
        for (const auto& t : terms)
          v.add_scaled(a.mul(a.mul(ei, a.act(t.second, c)), a.act(t.first, j)), t.coef);
        for (const auto& [row, x] : v) out(row * n + c, i * n + j) = x;
      }
  });
  return out;
}

Matrix azumaya_g(const ModuleAlgebra& a, const Elem& r) {
  std::size_t n = a.dim(), d = a.hopf()->dim();
  auto terms = r_terms(r, d);
  Matrix out(n * n, n * n);
  parallel_for(n, [&](std::size_t i) {
    for (Index j = 0; j < n; ++j) {
      Elem ej = a.basis(j);
      for (Index c = 0; c < n; ++c) {
        Elem v;
        for (const auto& t : terms)
          v.add_scaled(a.mul(a.mul(a.act(t.second, i), a.act(t.first, c)), ej), t.coef);
        for (const auto& [row, x] : v) out(row * n + c, i * n + j) = x;
      }
    }
  });
  return out;
}

AzumayaReport azumaya_check(const ModuleAlgebra& a, const Elem& r) {
  AzumayaReport rep;
  rep.target = a.dim() * a.dim();
  rep.rank_f = rank(azumaya_f(a, r));
  rep.rank_g = rank(azumaya_g(a, r));
  return rep;
}

InnerActionData inner_decomposition(const ModuleAlgebra& m) {
  const Hopf& h = *m.hopf();
  unsigned n = en_rank(h);
  auto gens = m.generators();
  Elem one = m.unit();

  std::vector<Elem> cg, zero(gens.size());
  for (const auto& g : gens) cg.push_back(m.act(kC, g));
  auto sol = solve_sandwich(m, cg, gens, zero);
  if (!sol || sol->kernel.size() != 1)
    throw NoInnerImplementation("c-action is not implemented by a unique inner automorphism (solution space dimension " +
                                std::to_string(sol ? sol->kernel.size() : 0) + ")");
  InnerActionData d;
  d.u = from_vector(sol->kernel[0]);
  auto alpha = as_scalar(m.mul(d.u, d.u), one);
  if (!alpha || alpha->is_zero()) throw NoInnerImplementation("u^2 is not a nonzero scalar");
  Scalar target = alpha->square_class();
  d.u *= (target / *alpha).sqrt();
  if (!canonical_sign(d.u.begin()->second)) d.u *= Scalar(-1);
  d.alpha = target;

  d.mu.assign(n, m.field().zero());
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Elem> rhs;
    for (const auto& g : gens) rhs.push_back(m.act(x_index(i), g) * Scalar(-1));
    auto ws = solve_sandwich(m, gens, cg, rhs);
    if (!ws || ws->kernel.size() != 1)
      throw NoInnerImplementation("x" + std::to_string(i) + "-action has no inner implementation");
    Elem w = from_vector(ws->particular);
    auto mu = as_scalar(m.mul(w, d.u) + m.mul(d.u, w), one);
    if (!mu) throw NoInnerImplementation("w u + u w is not central");
    // w -> w - (μ/α) u makes w anticommute with u.
    w.add_scaled(d.u, -(*mu / (Scalar(2) * d.alpha)));
    d.w.push_back(std::move(w));
  }
  d.l = Matrix(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) {
      auto v = as_scalar(m.mul(d.w[i], d.w[j]) + m.mul(d.w[j], d.w[i]), one);
      if (!v) throw NoInnerImplementation("w_i w_j + w_j w_i is not central");
      d.l(i, j) = d.l(j, i) = *v / Scalar(2);
    }
  auto bad = verify_inner(m, d);
  if (!bad.empty()) throw std::logic_error("inner decomposition failed verification: " + bad.front());
  return d;
}

std::vector<std::string> verify_inner(const ModuleAlgebra& m, const InnerActionData& d,
                                      const std::vector<Elem>& elems) {
  std::vector<std::string> out;
  unsigned n = static_cast<unsigned>(d.w.size());
  Elem one = m.unit();
  if (m.mul(d.u, d.u) != one * d.alpha) out.push_back("u^2 != alpha");
  for (unsigned i = 0; i < n; ++i) {
    if (m.mul(d.w[i], d.u) + m.mul(d.u, d.w[i]) != one * (Scalar(2) * d.mu[i]))
      out.push_back("w" + std::to_string(i + 1) + "u + uw" + std::to_string(i + 1) + " != 2 mu");
    for (unsigned j = i; j < n; ++j)
      if (m.mul(d.w[i], d.w[j]) + m.mul(d.w[j], d.w[i]) != one * (Scalar(2) * d.l(i, j)))
        out.push_back("w" + std::to_string(i + 1) + "w" + std::to_string(j + 1) + " relation fails");
  }
  std::vector<Elem> es = elems.empty() ? m.generators() : elems;
  for (const auto& a : es) {
    Elem ca = m.act(kC, a);
    if (m.mul(ca, d.u) != m.mul(d.u, a)) out.push_back("c-action is not conjugation by u at " + m.format(a));
    for (unsigned i = 0; i < n; ++i)
      if (m.act(x_index(i + 1), a) != m.mul(d.w[i], ca) - m.mul(a, d.w[i]))
        out.push_back("x" + std::to_string(i + 1) + "-action not reproduced at " + m.format(a));
  }
  return out;
}

namespace {

// The elements of vs that are independent of their predecessors.
std::vector<Elem> independent(const std::vector<Elem>& vs, std::size_t dim, const Field& f) {
  std::vector<Elem> out;
  std::size_t r = 0;
  for (const auto& v : vs) {
    out.push_back(v);
    std::size_t r2 = rank(matrix_of(out, dim, f));
    if (r2 == r)
      out.pop_back();
    else
      r = r2;
  }
  return out;
}

Elem span_coords(const std::vector<Elem>& basis, const Elem& v) {
  std::map<Index, SparseVec> rows;
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& [i, c] : basis[k]) rows[i].add(k, c);
  for (const auto& [i, c] : v) rows[i];
  LinearSystem sys(basis.size());
  for (const auto& [i, row] : rows) sys.add_equation(row, v.get(i));
  auto sol = sys.solve();
  if (!sol) throw std::logic_error("element outside the span");
  return from_vector(sol->particular);
}

// The submodule algebra spanned by an independent set closed under products
// and the action.
std::shared_ptr<const TableModule> submodule(const ModuleAlgebra& m, const std::vector<Elem>& basis) {
  std::size_t k = basis.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("s" + std::to_string(i));
  Algebra alg(m.field(), labels);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) alg.set_product(i, j, span_coords(basis, m.mul(basis[i], basis[j])));
  alg.set_unit(span_coords(basis, m.unit()));
  std::vector<std::vector<Elem>> action(m.hopf()->dim());
  for (Index h = 0; h < m.hopf()->dim(); ++h)
    for (const auto& e : basis) action[h].push_back(span_coords(basis, m.act(h, e)));
  return std::make_shared<TableModule>(m.hopf(), std::move(alg), std::move(action));
}

// a#b, scalars carried by a.
struct Pure {
  Elem a, b;
};

}  // namespace

InnerActionData inner_decomposition_braided(const ModulePtr& a, const ModulePtr& b, const Elem& r) {
  const Hopf& h = *a->hopf();
  unsigned n = en_rank(h);
  std::size_t dh = h.dim(), db = b->dim(), dim = a->dim() * db;
  auto rt = r_terms(r, dh);
  std::size_t count = std::size_t{1} << (n + 1);

  auto span_of = [&](const ModuleAlgebra& m) {
    auto dm = inner_decomposition(m);
    std::vector<Elem> mons;
    for (Index k = 0; k < count; ++k)
      mons.push_back(monomial_operator(k, m.unit(), dm.u, dm.w, [&](const Elem& x, const Elem& y) { return m.mul(x, y); }));
    return independent(mons, m.dim(), m.field());
  };
  auto sa = span_of(*a), sb = span_of(*b);
  std::vector<Pure> ansatz;
  for (const auto& x : sa)
    for (const auto& y : sb) ansatz.push_back({x, y});

  std::vector<Pure> gens;
  for (const auto& g : a->generators()) gens.push_back({g, b->unit()});
  for (const auto& g : b->generators()) gens.push_back({a->unit(), g});

  auto act = [&](Index k, const Pure& x) {
    std::vector<Pure> out;
    for (const auto& [t, c] : h.delta(k)) {
      Elem l = a->act(t / dh, x.a);
      if (l.empty()) continue;
      Elem rr = b->act(t % dh, x.b);
      if (!rr.empty()) out.push_back({l * c, std::move(rr)});
    }
    return out;
  };
  auto expand = [&](const std::vector<Pure>& xs) {
    Elem out;
    for (const auto& x : xs) out += tensor(x.a, x.b, db);
    return out;
  };
  auto product = [&](const std::vector<Pure>& xs, const std::vector<Pure>& ys) {
    Elem out;
    for (const auto& x : xs)
      for (const auto& y : ys)
        for (const auto& t : rt) {
          Elem left = a->mul(x.a, a->act(t.second, y.a));
          if (left.empty()) continue;
          Elem right = b->mul(b->act(t.first, x.b), y.b);
          if (!right.empty()) out.add_scaled(tensor(left, right, db), t.coef);
        }
    return out;
  };

  std::size_t ng = gens.size(), ns = ansatz.size();
  std::vector<std::vector<Pure>> cg;
  for (const auto& g : gens) cg.push_back(act(kC, g));
  // (c.g) s, s g, g s, s (c.g) for each ansatz element s and generator g.
  std::vector<std::vector<std::array<Elem, 4>>> prods(ns, std::vector<std::array<Elem, 4>>(ng));
  parallel_for(ns, [&](std::size_t s) {
    std::vector<Pure> e{ansatz[s]};
    for (std::size_t g = 0; g < ng; ++g)
      prods[s][g] = {product(cg[g], e), product(e, {gens[g]}), product({gens[g]}, e), product(e, cg[g])};
  });
  auto columns = [&](int left, int right) {
    std::vector<Column> cols(ns);
    for (std::size_t s = 0; s < ns; ++s)
      for (std::size_t g = 0; g < ng; ++g)
        for (const auto& [i, c] : prods[s][g][left] - prods[s][g][right]) cols[s].emplace_back(g * dim + i, c);
    return cols;
  };

  auto sol = solve_columns(columns(0, 1), {});
  if (!sol || sol->kernel.size() != 1)
    throw NoInnerImplementation("c-action is not implemented by a unique element of Ind(A)#Ind(B) (solution space dimension " +
                                std::to_string(sol ? sol->kernel.size() : 0) + ")");

  // Relations are evaluated in the subalgebra Ind(A)#Ind(B).
  auto sub = braided_product(submodule(*a, sa), submodule(*b, sb), r);
  const ModuleAlgebra& m = *sub;
  Elem one = m.unit();
  auto embed = [&](const Elem& x) {
    Elem out;
    for (const auto& [s, c] : x) out.add_scaled(tensor(sa[s / sb.size()], sb[s % sb.size()], db), c);
    return out;
  };

  InnerActionData d;
  Elem u = from_vector(sol->kernel[0]);
  auto alpha = as_scalar(m.mul(u, u), one);
  if (!alpha || alpha->is_zero()) throw NoInnerImplementation("u^2 is not a nonzero scalar");
  d.alpha = alpha->square_class();
  u *= (d.alpha / *alpha).sqrt();
  if (!canonical_sign(embed(u).begin()->second)) u *= Scalar(-1);

  d.mu.assign(n, h.field().zero());
  std::vector<Elem> w;
  auto wcols = columns(2, 3);
  for (unsigned i = 1; i <= n; ++i) {
    Column rhs;
    for (std::size_t g = 0; g < ng; ++g)
      for (const auto& [k, c] : expand(act(x_index(i), gens[g]))) rhs.emplace_back(g * dim + k, -c);
    auto ws = solve_columns(wcols, rhs);
    if (!ws || ws->kernel.size() != 1)
      throw NoInnerImplementation("x" + std::to_string(i) + "-action has no inner implementation in Ind(A)#Ind(B)");
    Elem wi = from_vector(ws->particular);
    auto mu = as_scalar(m.mul(wi, u) + m.mul(u, wi), one);
    if (!mu) throw NoInnerImplementation("w u + u w is not central");
    wi.add_scaled(u, -(*mu / (Scalar(2) * d.alpha)));
    w.push_back(std::move(wi));
  }
  d.l = Matrix(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) {
      auto v = as_scalar(m.mul(w[i], w[j]) + m.mul(w[j], w[i]), one);
      if (!v) throw NoInnerImplementation("w_i w_j + w_j w_i is not central");
      d.l(i, j) = d.l(j, i) = *v / Scalar(2);
    }
  if (m.mul(u, u) != one * d.alpha) throw std::logic_error("u^2 != alpha after scaling");
  d.u = embed(u);
  for (const auto& x : w) d.w.push_back(embed(x));
  return d;
}

InnerActionData normalize_pi(const InnerActionData& d) {
  InnerActionData out = d;
  std::size_t n = d.w.size();
  Scalar inv = d.alpha.inverse();
  for (std::size_t j = 0; j < n; ++j) {
    out.w[j].add_scaled(d.u, -d.mu[j] * inv);
    for (std::size_t i = 0; i < n; ++i) out.l(i, j) = d.l(i, j) - d.mu[i] * d.mu[j] * inv;
  }
  for (auto& x : out.mu) x = d.alpha * Scalar(0);
  return out;
}

InnerActionData rescale(const InnerActionData& d, const Scalar& t) {
  InnerActionData out = d;
  out.u *= t;
  out.alpha = d.alpha * t * t;
  for (auto& x : out.mu) x *= t;
  return out;
}

Matrix invariant_matrix(const InnerActionData& d) {
  std::size_t n = d.w.empty() ? d.mu.size() : d.w.size();
  Matrix out(n + 1, n + 1);
  out(0, 0) = d.alpha;
  for (std::size_t i = 0; i < n; ++i) {
    out(0, i + 1) = out(i + 1, 0) = d.mu[i];
    for (std::size_t j = 0; j < n; ++j) out(i + 1, j + 1) = d.l(i, j);
  }
  return out;
}

bool strongly_inner_test(const InnerActionData& d) {
  return !d.alpha.is_zero() && d.alpha.is_square() && rank(invariant_matrix(d)) == 1;
}

std::optional<std::vector<Elem>> strongly_inner_map(const ModuleAlgebra& m, const InnerActionData& d) {
  if (!strongly_inner_test(d)) return std::nullopt;
  const Hopf& h = *m.hopf();
  std::size_t dh = h.dim();
  InnerActionData nd = normalize_pi(d);
  Scalar t = d.alpha.inverse().sqrt();
  Elem pc = nd.u * t;
  std::vector<Elem> px;
  for (const auto& w : nd.w) px.push_back(m.mul(w, pc));
  std::vector<Elem> pi(dh);
  for (Index k = 0; k < dh; ++k)
    pi[k] = monomial_operator(k, m.unit(), pc, px, [&](const Elem& a, const Elem& b) { return m.mul(a, b); });
  auto pi_of = [&](const Elem& x) {
    Elem out;
    for (const auto& [k, c] : x) out.add_scaled(pi[k], c);
    return out;
  };
  for (Index k = 0; k < dh; ++k)
    for (Index l = 0; l < dh; ++l)
      if (pi_of(h.alg().product(k, l)) != m.mul(pi[k], pi[l]))
        throw std::logic_error("pi is not multiplicative at " + hlabel(h, k) + ", " + hlabel(h, l));
  for (const auto& g : m.generators())
    for (Index k = 0; k < dh; ++k) {
      Elem v;
      for (const auto& [s, c] : h.delta(k)) v.add_scaled(m.mul(m.mul(pi[s / dh], g), pi_of(h.s(s % dh))), c);
      if (v != m.act(k, g)) throw std::logic_error("pi does not implement the action at " + hlabel(h, k));
    }
  return pi;
}

ModulePtr inner_module(const HopfPtr& en, Algebra alg, const Elem& u, const std::vector<Elem>& w) {
  auto ui = alg.inverse(u);
  if (!ui) throw std::invalid_argument("u must be invertible");
  std::size_t d = alg.dim();
  Matrix c(d, d);
  std::vector<Matrix> x(w.size(), Matrix(d, d));
  for (Index i = 0; i < d; ++i) {
    Elem ca = alg.mul(alg.mul(u, alg.basis(i)), *ui);
    for (const auto& [k, v] : ca) c(k, i) = v;
    for (std::size_t j = 0; j < w.size(); ++j)
      for (const auto& [k, v] : alg.mul(w[j], ca) - alg.mul(alg.basis(i), w[j])) x[j](k, i) = v;
  }
  return module_from_generators(en, std::move(alg), c, x);
}

LambdaIso lambda_iso(const ModulePtr& a, const ModulePtr& b, const Elem& r, const std::vector<Elem>& f) {
  std::size_t da = a->dim(), db = b->dim(), d = a->hopf()->dim();
  auto terms = r_terms(r, d);
  auto ab = braided_product(a, b, r);
  std::size_t n = da * db;
  std::vector<Elem> image(n);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < db; ++j) {
      Elem v;
      for (const auto& t : terms) v.add_scaled(tensor(a->act(t.second, i), b->mul(f[t.first], b->basis(j)), db), t.coef);
      image[i * db + j] = std::move(v);
    }
  LambdaIso out;
  out.lambda = matrix_of(image, n, a->field());
  if (rank(out.lambda) != n) out.violations.push_back("Lambda is not bijective");
  Report report;
  parallel_for(n, [&](std::size_t x) {
    for (Index y = 0; y < n; ++y) {
      Elem prod = tensor(a->product(x / db, y / db), b->product(x % db, y % db), db);
      Elem lhs;
      for (const auto& [k, c] : prod) lhs.add_scaled(image[k], c);
      if (lhs != ab->mul(image[x], image[y]))
        report.add("Lambda not multiplicative at " + ab->label(x) + ", " + ab->label(y));
    }
  });
  for (auto& s : report.lines) out.violations.push_back(std::move(s));
  return out;
}

SigmaRepresentation sigma_representation(const Bilinear& sigma) {
  const HopfPtr& hp = sigma.domain();
  const Hopf& h = *hp;
  std::size_t d = h.dim();
  const Field& fld = h.field();
  SigmaRepresentation out;
  out.f.assign(d, Matrix::identity(d, fld) * fld.zero());
  for (Index k = 0; k < d; ++k)
    for (Index i = 0; i < d; ++i)
      for (const auto& [s, c1] : h.delta(k))
        for (const auto& [t, c2] : h.delta(i)) {
          Scalar v = sigma.at(s / d, t / d);
          if (v.is_zero()) continue;
          for (const auto& [p, c3] : h.alg().product(s % d, t % d)) out.f[k](p, i) += c1 * c2 * c3 * v;
        }
  auto inv = convolution_inverse(sigma);
  if (!inv) throw std::invalid_argument("sigma is not convolution invertible");
  out.f_inverse.assign(d, Matrix::identity(d, fld) * fld.zero());
  for (Index k = 0; k < d; ++k)
    for (const auto& [t, c] : h.delta2(k)) {
      Index h1 = t / (d * d), h2 = (t / d) % d, h3 = t % d;
      Scalar v = (*inv)(h.s(h2), h.alg().basis(h3));
      if (v.is_zero()) continue;
      for (const auto& [s, e] : h.s(h1)) out.f_inverse[k] += out.f[s] * (c * v * e);
    }
  return out;
}

std::vector<std::string> check_sigma_representation(const Bilinear& sigma, const SigmaRepresentation& rep) {
  const Hopf& h = *sigma.domain();
  std::size_t d = h.dim();
  std::vector<std::string> out;
  Matrix zero = Matrix::identity(d, h.field()) * h.field().zero();
  for (Index k = 0; k < d; ++k) {
    Matrix left = zero, right = zero;
    for (const auto& [t, c] : h.delta(k)) {
      left += rep.f[t / d] * rep.f_inverse[t % d] * c;
      right += rep.f_inverse[t / d] * rep.f[t % d] * c;
    }
    Matrix id = Matrix::identity(d, h.field()) * h.eps(k);
    if (left != id || right != id) out.push_back("f^{-1} is not a convolution inverse at " + hlabel(h, k));
    for (Index l = 0; l < d; ++l) {
      Matrix rhs = zero;
      for (const auto& [s, c1] : h.delta(k))
        for (const auto& [t, c2] : h.delta(l)) {
          Scalar v = sigma.at(s / d, t / d);
          if (v.is_zero()) continue;
          for (const auto& [p, c3] : h.alg().product(s % d, t % d)) rhs += rep.f[p] * (c1 * c2 * c3 * v);
        }
      if (rep.f[k] * rep.f[l] != rhs)
        out.push_back("f(h)f(l) != sigma(h1,l1) f(h2 l2) at " + hlabel(h, k) + ", " + hlabel(h, l));
    }
  }
  return out;
}

ModulePtr a_sigma(const Bilinear& sigma) {
  auto rep = sigma_representation(sigma);
  return inner_end(sigma.domain(), rep.f, rep.f_inverse);
}

InducedSubalgebra induced_subalgebra(const ModuleAlgebra& m, const InnerActionData& d) {
  for (const auto& x : d.mu)
    if (!x.is_zero()) throw std::invalid_argument("normalize mu to 0 first");
  const Hopf& h = *m.hopf();
  unsigned n = static_cast<unsigned>(d.w.size());
  InducedSubalgebra out;
  std::size_t count = std::size_t{1} << (n + 1);
  for (Index k = 0; k < count; ++k)
    out.basis.push_back(monomial_operator(k, m.unit(), d.u, d.w, [&](const Elem& a, const Elem& b) { return m.mul(a, b); }));
  auto span_rank = [&](const std::vector<Elem>& vs) { return rank(matrix_of(vs, m.dim(), m.field())); };
  out.dim = span_rank(out.basis);
  out.kernel_dim = count - out.dim;
  auto in_span = [&](const Elem& v) {
    auto vs = out.basis;
    vs.push_back(v);
    return span_rank(vs) == out.dim;
  };
  Elem one = m.unit();
  if (m.act(kC, d.u) != d.u) out.violations.push_back("c.u != u");
  for (unsigned j = 0; j < n; ++j) {
    if (m.act(kC, d.w[j]) != d.w[j] * Scalar(-1)) out.violations.push_back("c.w != -w");
    if (m.act(x_index(j + 1), d.u) != m.mul(d.u, d.w[j]) * Scalar(-2)) out.violations.push_back("x.u != -2uw");
    for (unsigned i = 0; i < n; ++i)
      if (m.act(x_index(j + 1), d.w[i]) != one * (Scalar(-2) * d.l(i, j))) out.violations.push_back("x.w != -2l");
  }
  for (const auto& a : out.basis) {
    for (Index k = 0; k < h.dim(); ++k)
      if (!in_span(m.act(k, a))) out.violations.push_back("not a submodule");
    for (const auto& b : out.basis)
      if (!in_span(m.mul(a, b))) out.violations.push_back("not closed under products");
  }
  return out;
}

}  // namespace en
