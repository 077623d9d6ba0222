#pragma once

#include <functional>

#include "en/module_algebra.hpp"

namespace en {

struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// M skew with its last r rows and columns zero.
bool admissible_m(unsigned n, unsigned r, const Matrix& m);

// Element of Sym_{M,n,r}: L = [[0, l1], [l1^t, l2]] with a zero top-left
// (n-r) block, l1 of size (n-r) x r and l2 symmetric r x r.
struct SymBlockMatrix {
  unsigned n = 0, r = 0;
  Matrix m;
  Matrix l1, l2;

  Matrix assembled() const;
  // Splits a full symmetric matrix, throwing ShapeMismatch on a nonzero
  // top-left block or an inadmissible M.
  static SymBlockMatrix from_matrix(unsigned r, const Matrix& m, const Matrix& l);
};

// L + N - 2(NML) - 2(NML)^t, with no shape requirements.
Matrix sym_sum(const Matrix& l, const Matrix& n, const Matrix& m);
// L⊕N. Both displayed forms of the law are evaluated and must agree, as must
// the block pair form; throws ShapeMismatch when (n, r, M) differ.
SymBlockMatrix sym_group_op(const SymBlockMatrix& x, const SymBlockMatrix& y);
// (l1, l2) ⊕ (n1, n2) = (l1 + n1, l2 + n2 - 2 n1^t M' l1 + 2 l1^t M' n1), M'
// the top-left (n-r) block of M.
SymBlockMatrix sym_pair_op(const SymBlockMatrix& x, const SymBlockMatrix& y);
SymBlockMatrix sym_inverse(const SymBlockMatrix& x);
SymBlockMatrix sym_zero(unsigned n, unsigned r, const Matrix& m);

// Central extension 0 → Sym_r → Sym_{M,n,r} → M_{n-r,r} → 0 checked on the
// given elements.
struct CentralExtensionReport {
  std::size_t kernel_dim = 0;    // r(r+1)/2
  std::size_t quotient_dim = 0;  // (n-r) r
  std::vector<std::string> violations;
};
CentralExtensionReport central_extension_decompose(const std::vector<SymBlockMatrix>& sample,
                                                   const std::vector<Matrix>& kernel_sample);

// Brauer class represented by its invariants (α, L) and a concrete module
// algebra. `opaque` marks E(0) witnesses whose class is not an inner one.
struct BrauerClassWitness {
  Scalar alpha;
  Matrix l;
  ModulePtr representative;
  bool strongly_inner = false;
  bool opaque = false;
};

BrauerClassWitness witness_of(const ModulePtr& rep);
// A^σ for σ = build_sigma(-L).
BrauerClassWitness chi_on_representative(const HopfPtr& en, const Matrix& l);

struct ChiProductReport {
  Matrix expected;  // sym_group_op(x, y)
  Matrix observed;  // L of A^σ # A^σ' under R_M
  Scalar alpha;
  bool ok() const { return observed == expected && alpha.is_one(); }
};
ChiProductReport chi_product_check(const HopfPtr& en, const SymBlockMatrix& x, const SymBlockMatrix& y);

// Restriction along E(m) ⊂ E(n) (c, x_1..x_m) and inflation along the
// projection E(n) → E(m) killing x_{m+1}..x_n.
ModulePtr restrict_module(const ModulePtr& a, const HopfPtr& sub);
ModulePtr inflate_module(const ModulePtr& a, const HopfPtr& big);
struct SplitMaps {
  HopfPtr small, big;
  std::function<BrauerClassWitness(const BrauerClassWitness&)> j_star, p_star;
};
// E(n-r) ⊂ E(n); M must be admissible.
SplitMaps split_maps(unsigned n, unsigned r, const Matrix& m, const Field& f = {});

// H_α: H with h.m = Σ α(h2) m S^{-1}(h1); A_α = End(H_α) with
// (h.f)(m) = Σ h1.f(S(h2).m) and ρ(f)(m) = Σ f(m0)0 ⊗ S^{-1}(m1) f(m0)1.
// With composition as the product, ρ is multiplicative into A⊗H^op.
struct AAlpha {
  std::vector<Matrix> rep;  // operators of the basis of H on H_α
  ModulePtr module;
  Comodule comodule;
};
AAlpha build_A_alpha(const HopfPtr& en, const Matrix& t);

// Grouplikes g (Δg = g⊗g, ε(g) = 1) of a Hopf algebra whose basis is graded
// as a coalgebra by `degree`.
std::vector<Elem> grouplikes(const Hopf& h, const std::function<unsigned(Index)>& degree);

struct GrouplikeData {
  std::vector<Elem> g_h;       // G(E(n)) in the basis of E(n)
  std::vector<Elem> g_dual;    // G(E(n)*) in the dual basis
  std::vector<std::pair<std::size_t, std::size_t>> g_d_dual;  // pairs (i, j) in G(D(H)*)
  std::vector<std::vector<Matrix>> theta;  // theta[i][j] = θ(g_h[i], g_dual[j])
};
// Σ g h1 λ(h2) = Σ h2 g λ(h1) for all basis h.
bool in_g_d_dual(const Hopf& h, const Elem& g, const Elem& lambda);
// θ(g, λ)(h) = Σ λ(h1) g h2 g^{-1} λ^{-1}(h3) as a matrix on H.
Matrix theta(const Hopf& h, const Elem& g, const Elem& lambda);
GrouplikeData grouplike_computations(const HopfPtr& en);

// h ._α b = α(h).b, with α given by its matrix on the basis of H.
ModulePtr twist_module(const ModulePtr& a, const Matrix& alpha);

struct AutActionReport {
  Matrix expected;  // T L T^t
  Matrix observed;  // L of A^L(T)
  bool w_match = false;  // W'_i = Σ t_ij W_j
  bool ok() const { return observed == expected && w_match; }
};
Matrix aut_conjugation_action(const Matrix& t, const Matrix& l);
AutActionReport aut_conjugation_check(const HopfPtr& en, const Matrix& t, const Matrix& l);

// (T, L)(T', L') = (TT', L + T L' T^t) in (GL_n/±1) ⋉ Sym_n.
struct SemidirectElem {
  Matrix t, l;
};
SemidirectElem semidirect_mul(const SemidirectElem& a, const SemidirectElem& b);
SemidirectElem semidirect_inverse(const SemidirectElem& a);
bool semidirect_equal(const SemidirectElem& a, const SemidirectElem& b);

struct SemidirectReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
};
// For each pair: the conjugation law (T,0)(Id,L)(T^{-1},0) = (Id, TLT^t)
// in the group and through A^L(T); the Sym part of (T,L)(T',L') against
// the invariants of A^L # A^{L'}(T) under R_0; and the injectivity probe
// (trivial image forces T = ±Id and L = 0, witnessed by some N with
// TNT^t != N otherwise).
SemidirectReport semidirect_embedding_check(const HopfPtr& en, const std::vector<SemidirectElem>& pairs);

}  // namespace en
