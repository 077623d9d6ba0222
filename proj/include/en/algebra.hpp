#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "en/matrix.hpp"
#include "en/sparse.hpp"

namespace en {

struct DomainMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Element of a finite-dimensional algebra or tensor space, in basis coordinates.
using Elem = SparseVec;

// Finite-dimensional associative algebra given by structure constants.
class Algebra {
 public:
  Algebra() = default;
  Algebra(Field field, std::vector<std::string> labels);

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  void set_product(Index i, Index j, Elem v);
  void add_product(Index i, Index j, Index k, const Scalar& c);
  // e_i * e_j; a reference to an empty vector when the product vanishes.
  const Elem& product(Index i, Index j) const;
  void set_unit(Elem u) { unit_ = std::move(u); }
  const Elem& unit() const { return unit_; }

  Elem basis(Index i) const { return Elem::unit(i, field_.one()); }
  Elem scalar(const Scalar& c) const { return unit_ * c; }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem commutator(const Elem& a, const Elem& b) const { return mul(a, b) - mul(b, a); }
  Elem pow(const Elem& a, unsigned k) const;

  // Matrix of x -> a*x (left) or x -> x*a (right) in the basis.
  Matrix left_matrix(const Elem& a) const;
  Matrix right_matrix(const Elem& a) const;
  // Inverse of a, if it exists.
  std::optional<Elem> inverse(const Elem& a) const;

  std::string format(const Elem& a) const;
  // Violated axioms (associativity on basis triples, unit); empty if valid.
  std::vector<std::string> check_axioms() const;
  std::size_t nonzero_products() const { return table_.size(); }
  const std::unordered_map<Index, Elem>& table() const { return table_; }

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::unordered_map<Index, Elem> table_;
  Elem unit_;
};

// Tensor product with componentwise multiplication, index i*dim(b) + j.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
// Opposite algebra.
Algebra opposite_algebra(const Algebra& a);

// Iterated tensor product of algebras, multiplied componentwise without
// materializing structure constants. Index is mixed radix, first factor most
// significant.
class TensorSpace {
 public:
  explicit TensorSpace(std::vector<const Algebra*> factors);

  std::size_t factors() const { return f_.size(); }
  std::size_t dim() const { return dim_; }
  const Algebra& factor(std::size_t i) const { return *f_[i]; }
  Index index(const std::vector<Index>& parts) const;
  std::vector<Index> split(Index i) const;

  Elem one() const;
  Elem pure(const std::vector<Elem>& parts) const;
  Elem mul(const Elem& a, const Elem& b) const;
  // Tensor factor k of the result is factor perm[k] of the input.
  Elem permute(const Elem& a, const std::vector<std::size_t>& perm) const;
  std::string format(const Elem& a) const;

 private:
  std::vector<const Algebra*> f_;
  std::size_t dim_ = 1;
};

// Finite-dimensional Hopf algebra. Coproducts live in H⊗H with index i*dim+j.
class Hopf {
 public:
  Hopf(Algebra alg, std::vector<Elem> coproduct, std::vector<Scalar> counit,
       std::vector<Elem> antipode);

  const Algebra& alg() const { return alg_; }
  std::size_t dim() const { return alg_.dim(); }
  const Field& field() const { return alg_.field(); }

  const Elem& delta(Index i) const { return delta_[i]; }
  const Scalar& eps(Index i) const { return eps_[i]; }
  const Elem& s(Index i) const { return s_[i]; }
  // Empty when S is not bijective.
  const std::vector<Elem>& s_inverse_images() const { return s_inv_; }

  Elem coproduct(const Elem& a) const;
  Scalar counit(const Elem& a) const;
  Elem antipode(const Elem& a) const;
  Elem antipode_inverse(const Elem& a) const;
  // (Δ⊗id)Δ(e_i) in H⊗H⊗H, index (i*d+j)*d+k.
  Elem delta2(Index i) const;
  Elem delta2(const Elem& a) const;
  // (Δ⊗id⊗...)Δ to k tensor factors (k >= 1).
  Elem iterated_delta(const Elem& a, unsigned k) const;

  TensorSpace square() const { return TensorSpace({&alg_, &alg_}); }
  TensorSpace cube() const { return TensorSpace({&alg_, &alg_, &alg_}); }

 private:
  Algebra alg_;
  std::vector<Elem> delta_;
  std::vector<Scalar> eps_;
  std::vector<Elem> s_, s_inv_;
};

using HopfPtr = std::shared_ptr<const Hopf>;

std::vector<std::string> check_hopf_axioms(const Hopf& h);

// Linear dual H* with the dual basis: (e^i e^j)(h) = e^i(h1) e^j(h2).
Hopf dual_hopf(const Hopf& h);
// The group algebra of Z_2.
Hopf group_algebra_z2(const Field& f = {});

// Linear form on H, stored by its values on the basis.
struct Functional {
  HopfPtr domain;
  Vector values;

  Scalar operator()(const Elem& a) const;
};

Functional counit_functional(const HopfPtr& h);
Functional convolution(const Functional& f, const Functional& g);
std::optional<Functional> convolution_inverse(const Functional& f);

// Bilinear form on H⊗H, entry (i,j) = value on e_i⊗e_j.
class Bilinear {
 public:
  Bilinear() = default;
  Bilinear(HopfPtr domain, Matrix values);

  static Bilinear epsilon(const HopfPtr& h);

  const HopfPtr& domain() const { return h_; }
  const Matrix& matrix() const { return m_; }
  const Scalar& at(Index i, Index j) const { return m_(i, j); }
  Scalar operator()(const Elem& a, const Elem& b) const;
  // Value on an element of H⊗H (index i*d+j).
  Scalar on_tensor(const Elem& t) const;
  Bilinear transposed() const;  // f∘τ

  friend bool operator==(const Bilinear& a, const Bilinear& b) { return a.m_ == b.m_; }
  friend bool operator!=(const Bilinear& a, const Bilinear& b) { return !(a == b); }

 private:
  HopfPtr h_;
  Matrix m_;
};

// (f*g)(h⊗l) = Σ f(h1⊗l1) g(h2⊗l2).
Bilinear convolution(const Bilinear& f, const Bilinear& g);
// Two-sided convolution inverse via an exact linear solve; nullopt if none.
std::optional<Bilinear> convolution_inverse(const Bilinear& f);

}  // namespace en
