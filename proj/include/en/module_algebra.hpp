#pragma once

#include <memory>
#include <optional>

#include "en/twisting.hpp"

namespace en {

struct NoInnerImplementation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotStronglyInner : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Left H-module algebra. Products and the action are evaluated on basis
// elements on demand, so braided products of large algebras are never
// materialized.
class ModuleAlgebra {
 public:
  explicit ModuleAlgebra(HopfPtr h) : h_(std::move(h)) {}
  virtual ~ModuleAlgebra() = default;

  const HopfPtr& hopf() const { return h_; }
  const Field& field() const { return h_->field(); }

  virtual std::size_t dim() const = 0;
  virtual Elem product(Index i, Index j) const = 0;
  virtual Elem unit() const = 0;
  // e_k ⇀ e_i for basis elements e_k of H and e_i of A.
  virtual Elem act(Index k, Index i) const = 0;
  virtual std::string label(Index i) const { return "e" + std::to_string(i); }
  // Generates the algebra; the basis unless a subclass knows better.
  virtual std::vector<Elem> generators() const;

  Elem basis(Index i) const { return Elem::unit(i, field().one()); }
  Elem scalar(const Scalar& c) const { return unit() * c; }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem act(Index k, const Elem& a) const;
  Elem act(const Elem& h, const Elem& a) const;
  std::string format(const Elem& a) const;

 private:
  HopfPtr h_;
};

using ModulePtr = std::shared_ptr<const ModuleAlgebra>;

// Structure constants held in an Algebra, action held as one column per pair
// of basis elements.
class TableModule : public ModuleAlgebra {
 public:
  // action[k][i] = e_k ⇀ e_i.
  TableModule(HopfPtr h, Algebra alg, std::vector<std::vector<Elem>> action,
              std::vector<Elem> generators = {});

  const Algebra& alg() const { return alg_; }
  std::size_t dim() const override { return alg_.dim(); }
  Elem product(Index i, Index j) const override { return alg_.product(i, j); }
  Elem unit() const override { return alg_.unit(); }
  Elem act(Index k, Index i) const override { return action_[k][i]; }
  std::string label(Index i) const override { return alg_.labels()[i]; }
  std::vector<Elem> generators() const override;
  using ModuleAlgebra::act;

 private:
  Algebra alg_;
  std::vector<std::vector<Elem>> action_;
  std::vector<Elem> gens_;
};

// h ⇀ a = ε(h) a.
ModulePtr trivial_module(const HopfPtr& h, Algebra alg);
// E(n)-action given by the operators of c and x_1..x_n on A (columns are
// images), extended to c^a x_P as C^a X_p1 ... X_ps.
ModulePtr module_from_generators(const HopfPtr& en, Algebra alg, const Matrix& c,
                                 const std::vector<Matrix>& x);
// Copies an arbitrary module algebra into a TableModule.
std::shared_ptr<const TableModule> materialize(const ModuleAlgebra& m);

// Violations of h⇀(ab) = Σ(h1⇀a)(h2⇀b), h⇀1 = ε(h)1, (hl)⇀a = h⇀(l⇀a) on
// basis elements of H and the given elements of A (all of A's basis when
// `elems` is empty).
std::vector<std::string> check_module_algebra(const ModuleAlgebra& m,
                                              const std::vector<Elem>& elems = {});
// Associativity and unit on the given elements (basis when empty).
std::vector<std::string> check_associative(const ModuleAlgebra& m,
                                           const std::vector<Elem>& elems = {});

// Full matrix algebra, basis E_ij at index i*m + j.
Algebra matrix_algebra(std::size_t m, const Field& f = {});
// A square matrix as an element of matrix_algebra(rows).
Elem matrix_element(const Matrix& a);

// End(V), basis E_ij at index i*dim V + j, with h⇀F = Σ π(h1) F π'(h2), where
// π' is the convolution inverse of π. Both are given on the basis of H.
ModulePtr inner_end(const HopfPtr& h, const std::vector<Matrix>& pi,
                    const std::vector<Matrix>& pi_inverse);
// End(P) of a left H-module P (rep[k] is the operator of e_k), with
// (h⇀F)(m) = Σ h1 F(S(h2) m).
ModulePtr end_of_module(const HopfPtr& h, const std::vector<Matrix>& rep);
// Operators of c^a x_P on a module given by the operators of c and x_i.
std::vector<Matrix> en_representation(const Hopf& en, const Matrix& c, const std::vector<Matrix>& x);

// Generalized Clifford algebra Cl(α, μ, L) on u, v_1..v_n: u^2 = α,
// uv_i + v_iu = 2μ_i, v_iv_j + v_jv_i = 2l_ij. Basis u^a v_P at index
// a | (P << 1), as for E(n).
struct CliffordAlgebra {
  unsigned n = 0;
  Matrix l;
  Scalar alpha;
  Vector mu;
  Algebra alg;
};

CliffordAlgebra build_clifford(unsigned n, const Matrix& l);
CliffordAlgebra build_clifford(const Scalar& alpha, const Vector& mu, const Matrix& l);

// Right H-comodule structure ρ(e_i) ∈ A⊗H at index a*dim H + h.
struct Comodule {
  HopfPtr h;
  std::vector<Elem> rho;
};

// ρ(u) = u⊗c, ρ(v_j) = 1⊗x_j + v_j⊗c, extended multiplicatively.
Comodule clifford_coaction(const CliffordAlgebra& cl, const HopfPtr& en);
// Coassociativity, counit, and multiplicativity into A⊗H (A⊗H^op when op).
std::vector<std::string> check_comodule_algebra(const Algebra& alg, const Comodule& rho, bool op = false);

// ρ(a) = Σ (R2⇀a)⊗R1, a right H^op-comodule algebra structure.
Comodule coaction_from_action(const ModuleAlgebra& m, const Elem& r);
// h⇀a = Σ r(a1⊗h) a0. See the notes in the implementation for the order of
// the arguments of r.
ModulePtr action_from_coaction(const Algebra& alg, const Comodule& rho, const Bilinear& r);

// A#B with (a#b)(a'#b') = Σ a(R2⇀a') # (R1⇀b)b' and the diagonal action;
// basis a#b at index a*dim B + b.
ModulePtr braided_product(const ModulePtr& a, const ModulePtr& b, const Elem& r);
// Ā: same module, product a·a' = Σ (R2⇀a')(R1⇀a).
ModulePtr h_opposite(const ModulePtr& a, const Elem& r);

// Σ R2⇀b ⊗ R1⇀a in B⊗A, index b*dim A + a.
Elem braiding(const ModuleAlgebra& a, const ModuleAlgebra& b, const Elem& r, const Elem& x, const Elem& y);

struct AzumayaReport {
  std::size_t rank_f = 0;
  std::size_t rank_g = 0;
  std::size_t target = 0;  // (dim A)^2
  bool azumaya() const { return rank_f == target && rank_g == target; }
};

// F(a#b̄)(c) = Σ a(R2⇀c)(R1⇀b) and G(ā#b)(c) = Σ (R2⇀a)(R1⇀c)b as exact
// (dim A)^2 square matrices; End(A) entries at index row*dim A + column.
Matrix azumaya_f(const ModuleAlgebra& a, const Elem& r);
Matrix azumaya_g(const ModuleAlgebra& a, const Elem& r);
AzumayaReport azumaya_check(const ModuleAlgebra& a, const Elem& r);

struct InnerActionData {
  Elem u;
  std::vector<Elem> w;
  Scalar alpha;
  Vector mu;
  Matrix l;
};

// Skolem-Noether: u with (c⇀g)u = ug on generators (a one-dimensional
// solution space is asserted), scaled so that u^2 is the canonical square
// class representative, then w_i with x_i⇀g = w_i(c⇀g) - g w_i chosen to
// anticommute with u. The returned data has μ = 0.
InnerActionData inner_decomposition(const ModuleAlgebra& m);
// Relations u^2 = α, w_iu + uw_i = 2μ_i, w_iw_j + w_jw_i = 2l_ij, and the
// reproduction of the action on the given elements (generators when empty).
std::vector<std::string> verify_inner(const ModuleAlgebra& m, const InnerActionData& d,
                                      const std::vector<Elem>& elems = {});
// The same data for A#B (coordinates as in braided_product(a, b, r)), with
// u and w_i sought inside the subalgebra Ind(A)#Ind(B) and the defining
// equations imposed on the generators of A#B. Avoids solving over all of
// A#B, whose dimension is the product of the two.
InnerActionData inner_decomposition_braided(const ModulePtr& a, const ModulePtr& b, const Elem& r);
// w_j -> w_j - μ_j α^{-1} u, which sends L to L - μμ^t/α and μ to 0.
InnerActionData normalize_pi(const InnerActionData& d);
// u -> t u, α -> t^2 α, μ -> t μ; L is unchanged.
InnerActionData rescale(const InnerActionData& d, const Scalar& t);

// The block matrix [[α, μ^t], [μ, L]].
Matrix invariant_matrix(const InnerActionData& d);
// α a square and rank [[α, μ^t], [μ, L]] = 1.
bool strongly_inner_test(const InnerActionData& d);
// The algebra map π: E(n) → A on the basis, π(c) = tu with t^2 α = 1, or
// nullopt if the action is not strongly inner. Multiplicativity and the
// reproduction of the action are verified before returning.
std::optional<std::vector<Elem>> strongly_inner_map(const ModuleAlgebra& m, const InnerActionData& d);

// E(n)-action on A given by c⇀a = uau^{-1} and x_i⇀a = w_i(c⇀a) - a w_i.
ModulePtr inner_module(const HopfPtr& en, Algebra alg, const Elem& u, const std::vector<Elem>& w);

// Λ(a⊗b) = Σ a0 # f(a1) b with ρ induced by R on A; f is the algebra map
// implementing the action on B. Matrix from A⊗B (componentwise) to A#B.
struct LambdaIso {
  Matrix lambda;
  std::vector<std::string> violations;  // multiplicativity and bijectivity
};
LambdaIso lambda_iso(const ModulePtr& a, const ModulePtr& b, const Elem& r, const std::vector<Elem>& f);

// f(h)(a) = Σ σ(h1⊗a1) h2a2 and its convolution inverse.
struct SigmaRepresentation {
  std::vector<Matrix> f;
  std::vector<Matrix> f_inverse;
};
SigmaRepresentation sigma_representation(const Bilinear& sigma);
// f(h)∘f(l) = Σ σ(h1⊗l1) f(h2l2) and f * f^{-1} = ε id on basis pairs.
std::vector<std::string> check_sigma_representation(const Bilinear& sigma, const SigmaRepresentation& rep);
// End(H) with h⇀F = Σ f(h1)∘F∘f^{-1}(h2).
ModulePtr a_sigma(const Bilinear& sigma);

struct InducedSubalgebra {
  std::vector<Elem> basis;   // images of the monomials u^a w_P spanning Ind(A)
  std::size_t dim = 0;
  std::size_t kernel_dim = 0;  // of Cl(α, 0, L) → A
  std::vector<std::string> violations;  // action table, closure
};
// Requires μ = 0.
InducedSubalgebra induced_subalgebra(const ModuleAlgebra& m, const InnerActionData& d);

}  // namespace en
