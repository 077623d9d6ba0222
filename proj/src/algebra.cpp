#include "en/algebra.hpp"

#include <mutex>
#include <sstream>

#include "en/parallel.hpp"

namespace en {

namespace {

const Elem kEmpty;

Index pair_key(Index i, Index j) { return (i << 32) | j; }

std::string term_string(const Scalar& c, const std::string& label, bool first) {
  std::string out;
  std::string v = c.str();
  bool neg = c.modulus() == 0 && v.front() == '-';
  if (neg) v.erase(0, 1);
  if (!first) out += neg ? " - " : " + ";
  else if (neg) out += "-";
  if (label == "1") return out + v;
  if (v != "1") out += v + "*";
  return out + label;
}

}  // namespace

Algebra::Algebra(Field field, std::vector<std::string> labels)
    : field_(field), labels_(std::move(labels)) {}

void Algebra::set_product(Index i, Index j, Elem v) {
  if (v.empty())
    table_.erase(pair_key(i, j));
  else
    table_[pair_key(i, j)] = std::move(v);
}

void Algebra::add_product(Index i, Index j, Index k, const Scalar& c) {
  auto& e = table_[pair_key(i, j)];
  e.add(k, c);
  if (e.empty()) table_.erase(pair_key(i, j));
}

const Elem& Algebra::product(Index i, Index j) const {
  auto it = table_.find(pair_key(i, j));
  return it == table_.end() ? kEmpty : it->second;
}

Elem Algebra::mul(const Elem& a, const Elem& b) const {
  Elem out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out.add_scaled(product(i, j), x * y);
  return out;
}

Elem Algebra::pow(const Elem& a, unsigned k) const {
  Elem out = unit_;
  for (unsigned i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

Matrix Algebra::left_matrix(const Elem& a) const {
  Matrix m = Matrix::identity(dim(), field_) * field_.zero();
  for (Index j = 0; j < dim(); ++j)
    for (const auto& [k, c] : mul(a, basis(j))) m(k, j) = c;
  return m;
}

Matrix Algebra::right_matrix(const Elem& a) const {
  Matrix m = Matrix::identity(dim(), field_) * field_.zero();
  for (Index j = 0; j < dim(); ++j)
    for (const auto& [k, c] : mul(basis(j), a)) m(k, j) = c;
  return m;
}

std::optional<Elem> Algebra::inverse(const Elem& a) const {
  Vector rhs(dim(), field_.zero());
  for (const auto& [k, c] : unit_) rhs[k] = c;
  auto x = solve_linear(left_matrix(a), rhs);
  if (!x) return std::nullopt;
  Elem inv;
  for (Index k = 0; k < dim(); ++k) inv.add(k, (*x)[k]);
  if (mul(inv, a) != unit_) return std::nullopt;
  return inv;
}

std::string Algebra::format(const Elem& a) const {
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : a) {
    out += term_string(c, labels_.at(i), first);
    first = false;
  }
  return out;
}

std::vector<std::string> Algebra::check_axioms() const {
  std::vector<std::string> bad;
  std::mutex mu;
  std::size_t d = dim();
  parallel_for(d, [&](std::size_t i) {
    for (Index j = 0; j < d; ++j) {
      const Elem& ij = product(i, j);
      for (Index k = 0; k < d; ++k) {
        Elem lhs = mul(ij, basis(k));
        Elem rhs = mul(basis(i), product(j, k));
        if (lhs != rhs) {
          std::lock_guard lock(mu);
          bad.push_back("associativity fails on (" + labels_[i] + ", " + labels_[j] + ", " +
                        labels_[k] + ")");
          return;
        }
      }
    }
  });
  for (Index i = 0; i < d; ++i) {
    if (mul(unit_, basis(i)) != basis(i) || mul(basis(i), unit_) != basis(i)) {
      bad.push_back("unit law fails on " + labels_[i]);
      break;
    }
  }
  return bad;
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("tensor factors over different fields");
  std::vector<std::string> labels;
  std::size_t db = b.dim();
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back(la + "⊗" + lb);
  Algebra t(a.field(), std::move(labels));
  for (const auto& [ka, va] : a.table())
    for (const auto& [kb, vb] : b.table()) {
      Index i = (ka >> 32) * db + (kb >> 32), j = (ka & 0xffffffffu) * db + (kb & 0xffffffffu);
      Elem out;
      for (const auto& [p, x] : va)
        for (const auto& [q, y] : vb) out.add(p * db + q, x * y);
      t.set_product(i, j, std::move(out));
    }
  Elem u;
  for (const auto& [p, x] : a.unit())
    for (const auto& [q, y] : b.unit()) u.add(p * db + q, x * y);
  t.set_unit(std::move(u));
  return t;
}

Algebra opposite_algebra(const Algebra& a) {
  Algebra op(a.field(), a.labels());
  for (const auto& [k, v] : a.table()) op.set_product(k & 0xffffffffu, k >> 32, v);
  op.set_unit(a.unit());
  return op;
}

TensorSpace::TensorSpace(std::vector<const Algebra*> factors) : f_(std::move(factors)) {
  for (auto* a : f_) dim_ *= a->dim();
}

Index TensorSpace::index(const std::vector<Index>& parts) const {
  if (parts.size() != f_.size()) throw DimensionMismatch("tensor index arity");
  Index i = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) i = i * f_[k]->dim() + parts[k];
  return i;
}

std::vector<Index> TensorSpace::split(Index i) const {
  std::vector<Index> parts(f_.size());
  for (std::size_t k = f_.size(); k-- > 0;) {
    parts[k] = i % f_[k]->dim();
    i /= f_[k]->dim();
  }
  return parts;
}

Elem TensorSpace::pure(const std::vector<Elem>& parts) const {
  if (parts.size() != f_.size()) throw DimensionMismatch("tensor arity");
  Elem out = Elem::unit(0, Scalar(1));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    Elem next;
    for (const auto& [i, x] : out)
      for (const auto& [j, y] : parts[k]) next.add(i * f_[k]->dim() + j, x * y);
    out = std::move(next);
  }
  return out;
}

Elem TensorSpace::one() const {
  std::vector<Elem> units;
  for (auto* a : f_) units.push_back(a->unit());
  return pure(units);
}

Elem TensorSpace::mul(const Elem& a, const Elem& b) const {
  Elem out;
  for (const auto& [i, x] : a) {
    auto pi = split(i);
    for (const auto& [j, y] : b) {
      auto pj = split(j);
      std::vector<Elem> parts;
      parts.reserve(f_.size());
      bool zero = false;
      for (std::size_t k = 0; k < f_.size() && !zero; ++k) {
        parts.push_back(f_[k]->product(pi[k], pj[k]));
        zero = parts.back().empty();
      }
      if (zero) continue;
      out.add_scaled(pure(parts), x * y);
    }
  }
  return out;
}

Elem TensorSpace::permute(const Elem& a, const std::vector<std::size_t>& perm) const {
  if (perm.size() != f_.size()) throw DimensionMismatch("permutation arity");
  Elem out;
  for (const auto& [i, x] : a) {
    auto p = split(i);
    Index j = 0;
    for (std::size_t k = 0; k < perm.size(); ++k) j = j * f_[perm[k]]->dim() + p[perm[k]];
    out.add(j, x);
  }
  return out;
}

std::string TensorSpace::format(const Elem& a) const {
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : a) {
    auto p = split(i);
    std::string label;
    for (std::size_t k = 0; k < p.size(); ++k) label += (k ? "⊗" : "") + f_[k]->labels()[p[k]];
    out += term_string(c, label == "1" ? "1⊗1" : label, first);
    first = false;
  }
  return out;
}

Hopf::Hopf(Algebra alg, std::vector<Elem> coproduct, std::vector<Scalar> counit,
           std::vector<Elem> antipode)
    : alg_(std::move(alg)),
      delta_(std::move(coproduct)),
      eps_(std::move(counit)),
      s_(std::move(antipode)) {
  std::size_t d = alg_.dim();
  if (delta_.size() != d || eps_.size() != d || s_.size() != d)
    throw DimensionMismatch("Hopf structure maps must cover the basis");
  Matrix sm = Matrix::identity(d, alg_.field()) * alg_.field().zero();
  for (Index j = 0; j < d; ++j)
    for (const auto& [k, c] : s_[j]) sm(k, j) = c;
  if (auto inv = inverse(sm)) {
    s_inv_.resize(d);
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k) s_inv_[j].add(k, (*inv)(k, j));
  }
}

Elem Hopf::coproduct(const Elem& a) const {
  Elem out;
  for (const auto& [i, c] : a) out.add_scaled(delta_[i], c);
  return out;
}

Scalar Hopf::counit(const Elem& a) const {
  Scalar s = field().zero();
  for (const auto& [i, c] : a) s += c * eps_[i];
  return s;
}

Elem Hopf::antipode(const Elem& a) const {
  Elem out;
  for (const auto& [i, c] : a) out.add_scaled(s_[i], c);
  return out;
}

Elem Hopf::antipode_inverse(const Elem& a) const {
  if (s_inv_.empty()) throw SingularMatrix("antipode is not bijective");
  Elem out;
  for (const auto& [i, c] : a) out.add_scaled(s_inv_[i], c);
  return out;
}

Elem Hopf::delta2(Index i) const {
  std::size_t d = dim();
  Elem out;
  for (const auto& [k, c] : delta_[i])
    for (const auto& [m, e] : delta_[k / d]) out.add(m * d + k % d, c * e);
  return out;
}

Elem Hopf::delta2(const Elem& a) const {
  Elem out;
  for (const auto& [i, c] : a) out.add_scaled(delta2(i), c);
  return out;
}

Elem Hopf::iterated_delta(const Elem& a, unsigned k) const {
  if (k == 0) throw std::invalid_argument("iterated coproduct needs at least one factor");
  std::size_t d = dim();
  Elem out = a;
  // Expand the first factor repeatedly; index = first * d^(m-1) + rest.
  Index rest_dim = 1;
  for (unsigned m = 1; m < k; ++m) {
    Elem next;
    for (const auto& [i, c] : out) {
      Index first = i / rest_dim, rest = i % rest_dim;
      for (const auto& [j, e] : delta_[first])
        next.add(j * rest_dim + rest, c * e);
    }
    out = std::move(next);
    rest_dim *= d;
  }
  return out;
}

std::vector<std::string> check_hopf_axioms(const Hopf& h) {
  std::vector<std::string> bad = h.alg().check_axioms();
  const Algebra& a = h.alg();
  std::size_t d = h.dim();
  TensorSpace t2 = h.square();
  auto first_fail = [&](const std::string& what, auto pred) {
    for (Index i = 0; i < d; ++i)
      if (!pred(i)) {
        bad.push_back(what + " fails on " + a.labels()[i]);
        return;
      }
  };
  first_fail("coassociativity", [&](Index i) {
    Elem rhs;
    for (const auto& [k, c] : h.delta(i))
      for (const auto& [m, e] : h.delta(k % d)) rhs.add((k / d) * d * d + m, c * e);
    return h.delta2(i) == rhs;
  });
  first_fail("counit law", [&](Index i) {
    Elem left, right;
    for (const auto& [k, c] : h.delta(i)) {
      left.add(k % d, c * h.eps(k / d));
      right.add(k / d, c * h.eps(k % d));
    }
    return left == a.basis(i) && right == a.basis(i);
  });
  first_fail("antipode axiom", [&](Index i) {
    Elem left, right;
    for (const auto& [k, c] : h.delta(i)) {
      left.add_scaled(a.mul(h.s(k / d), a.basis(k % d)), c);
      right.add_scaled(a.mul(a.basis(k / d), h.s(k % d)), c);
    }
    Elem target = a.unit() * h.eps(i);
    return left == target && right == target;
  });
  if (h.coproduct(a.unit()) != t2.one()) bad.push_back("coproduct of unit is not 1⊗1");
  if (!h.counit(a.unit()).is_one()) bad.push_back("counit of unit is not 1");
  std::mutex mu;
  bool mult_bad = false, eps_bad = false;
  parallel_for(d, [&](std::size_t i) {
    for (Index j = 0; j < d; ++j) {
      const Elem& p = a.product(i, j);
      bool dm = h.coproduct(p) != t2.mul(h.delta(i), h.delta(j));
      bool em = h.counit(p) != h.eps(i) * h.eps(j);
      if (dm || em) {
        std::lock_guard lock(mu);
        mult_bad = mult_bad || dm;
        eps_bad = eps_bad || em;
      }
    }
  });
  if (mult_bad) bad.push_back("coproduct is not multiplicative");
  if (eps_bad) bad.push_back("counit is not multiplicative");
  return bad;
}

Hopf dual_hopf(const Hopf& h) {
  std::size_t d = h.dim();
  std::vector<std::string> labels;
  for (const auto& l : h.alg().labels()) labels.push_back(l + "*");
  Algebra a(h.field(), labels);
  std::vector<Elem> delta(d), s(d);
  std::vector<Scalar> eps(d);
  for (Index k = 0; k < d; ++k)
    for (const auto& [ij, c] : h.delta(k)) a.add_product(ij / d, ij % d, k, c);
  Elem unit;
  for (Index k = 0; k < d; ++k) unit.add(k, h.eps(k));
  a.set_unit(unit);
  for (const auto& [key, v] : h.alg().table())
    for (const auto& [k, c] : v) delta[k].add((key >> 32) * d + (key & 0xffffffffu), c);
  for (Index k = 0; k < d; ++k) {
    eps[k] = h.alg().unit().get(k);
    for (const auto& [j, c] : h.s(k)) s[j].add(k, c);
  }
  for (auto& e : eps) e = h.field().from(e);
  return Hopf(std::move(a), std::move(delta), std::move(eps), std::move(s));
}

Hopf group_algebra_z2(const Field& f) {
  Algebra a(f, {"1", "g"});
  a.add_product(0, 0, 0, f.one());
  a.add_product(0, 1, 1, f.one());
  a.add_product(1, 0, 1, f.one());
  a.add_product(1, 1, 0, f.one());
  a.set_unit(a.basis(0));
  std::vector<Elem> delta{Elem::unit(0, f.one()), Elem::unit(3, f.one())};
  return Hopf(std::move(a), std::move(delta), {f.one(), f.one()},
              {Elem::unit(0, f.one()), Elem::unit(1, f.one())});
}

Scalar Functional::operator()(const Elem& a) const {
  Scalar s = domain->field().zero();
  for (const auto& [i, c] : a) s += c * values[i];
  return s;
}

Functional counit_functional(const HopfPtr& h) {
  Vector v(h->dim());
  for (Index i = 0; i < h->dim(); ++i) v[i] = h->eps(i);
  return {h, v};
}

Functional convolution(const Functional& f, const Functional& g) {
  if (f.domain != g.domain) throw DomainMismatch("functionals on different Hopf algebras");
  const Hopf& h = *f.domain;
  std::size_t d = h.dim();
  Vector out(d, h.field().zero());
  for (Index i = 0; i < d; ++i)
    for (const auto& [k, c] : h.delta(i)) out[i] += c * f.values[k / d] * g.values[k % d];
  return {f.domain, out};
}

std::optional<Functional> convolution_inverse(const Functional& f) {
  const Hopf& h = *f.domain;
  std::size_t d = h.dim();
  LinearSystem sys(d);
  for (Index i = 0; i < d; ++i) {
    SparseVec row;
    for (const auto& [k, c] : h.delta(i)) row.add(k % d, c * f.values[k / d]);
    sys.add_equation(row, h.eps(i));
  }
  auto sol = sys.solve();
  if (!sol || !sol->kernel.empty()) return std::nullopt;
  Functional g{f.domain, sol->particular};
  for (auto& v : g.values) v = h.field().from(v);
  if (convolution(g, f).values != counit_functional(f.domain).values) return std::nullopt;
  return g;
}

Bilinear::Bilinear(HopfPtr domain, Matrix values) : h_(std::move(domain)), m_(std::move(values)) {
  if (m_.rows() != h_->dim() || m_.cols() != h_->dim())
    throw DimensionMismatch("bilinear form must be dim x dim");
}

Bilinear Bilinear::epsilon(const HopfPtr& h) {
  std::size_t d = h->dim();
  Matrix m(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) m(i, j) = h->eps(i) * h->eps(j);
  return {h, m};
}

Scalar Bilinear::operator()(const Elem& a, const Elem& b) const {
  Scalar s = h_->field().zero();
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) s += x * y * m_(i, j);
  return s;
}

Scalar Bilinear::on_tensor(const Elem& t) const {
  std::size_t d = h_->dim();
  Scalar s = h_->field().zero();
  for (const auto& [k, c] : t) s += c * m_(k / d, k % d);
  return s;
}

Bilinear Bilinear::transposed() const { return {h_, m_.transpose()}; }

Bilinear convolution(const Bilinear& f, const Bilinear& g) {
  if (f.domain() != g.domain()) throw DomainMismatch("bilinear forms on different Hopf algebras");
  const Hopf& h = *f.domain();
  std::size_t d = h.dim();
  Matrix out(d, d);
  parallel_for(d, [&](std::size_t i) {
    for (Index j = 0; j < d; ++j) {
      Scalar s = h.field().zero();
      for (const auto& [a, x] : h.delta(i))
        for (const auto& [b, y] : h.delta(j)) {
          const Scalar& fv = f.at(a / d, b / d);
          if (fv.is_zero()) continue;
          s += x * y * fv * g.at(a % d, b % d);
        }
      out(i, j) = s;
    }
  });
  return {f.domain(), out};
}

std::optional<Bilinear> convolution_inverse(const Bilinear& f) {
  const Hopf& h = *f.domain();
  std::size_t d = h.dim();
  LinearSystem sys(d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      SparseVec row;
      for (const auto& [a, x] : h.delta(i))
        for (const auto& [b, y] : h.delta(j))
          row.add((a % d) * d + b % d, x * y * f.at(a / d, b / d));
      sys.add_equation(row, h.eps(i) * h.eps(j));
    }
  auto sol = sys.solve();
  if (!sol || !sol->kernel.empty()) return std::nullopt;
  Matrix m(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) m(i, j) = h.field().from(sol->particular[i * d + j]);
  Bilinear g(f.domain(), m);
  if (convolution(g, f) != Bilinear::epsilon(f.domain())) return std::nullopt;
  return g;
}

}  // namespace en
