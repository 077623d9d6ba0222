#pragma once

#include <optional>

#include "en/rmatrix.hpp"

namespace en {

struct LazyCocycle {
  HopfPtr en;
  // Upper-triangular M for ω(M), symmetric L for σ(L).
  Matrix params;
  bool symmetric = false;
  Bilinear form;
};

// ω(M): ω(x_i⊗x_j) = m_ij for i <= j, 0 for i > j, zero across different
// degrees, extended by the recurrence and parity relations.
LazyCocycle build_omega(const HopfPtr& en, const Matrix& m);

// σ(L), symmetric on generators: σ(x_i⊗x_j) = l_ij.
LazyCocycle build_sigma(const HopfPtr& en, const Matrix& l);

// The central functional θ = φ(1 + Σ_{i<j} l_ij x_i x_j) used for σ(L); its
// values on x_i x_j are l_ij.
Functional sigma_gauge(const HopfPtr& en, const Matrix& l);

// σ^θ(h⊗l) = θ(h1) θ(l1) σ(h2⊗l2) θ^{-1}(h3 l3).
Bilinear cohomologous_twist(const Bilinear& sigma, const Functional& theta);

// σ(g1⊗h1) σ(g2h2⊗m) = σ(h1⊗m1) σ(g⊗h2m2) on all basis triples.
std::vector<std::string> check_cocycle(const Bilinear& sigma);
// Σ σ(h1⊗l1) h2 l2 = Σ h1 l1 σ(h2⊗l2) on all basis pairs.
std::vector<std::string> check_lazy(const Bilinear& sigma);
std::vector<std::string> check_normalized(const Bilinear& sigma);

// Doi twist h ·σ l = σ(h1⊗l1) h2 l2 σ^{-1}(h3⊗l3).
Algebra twisted_product(const Bilinear& sigma);

// Whether a functional is central in the convolution algebra H*.
bool is_central(const Functional& theta);

struct TwistResult {
  Matrix b;       // r_B = σ·r_A
  Bilinear form;  // (στ) * r * σ^{-1}
};

// σ·r = (σ∘τ) * r * σ^{-1}; B = A - Λ with Λ_ij = σ(x_i⊗x_j) + σ(x_j⊗x_i).
TwistResult act_on_r(const Bilinear& sigma, const CoQTStructure& r);
// α_T·r = r∘(α_T^{-1}⊗α_T^{-1}).
Bilinear act_by_automorphism(const Bilinear& r, const Matrix& t);

struct OrbitWitness {
  Matrix s;  // witness cocycle is σ(s)
  LazyCocycle cocycle;
};

// r_A, r_B in one Z_L-orbit iff A - B is symmetric; the witness σ((A-B)/2)
// is verified by application.
std::optional<OrbitWitness> zl_orbit_equivalent(const HopfPtr& en, const Matrix& a, const Matrix& b);

struct OrbitLabel {
  std::size_t l = 0;
  Matrix t;             // t^T J_l t - a is symmetric
  Matrix sym_remainder;  // t^T J_l t - a
};

OrbitLabel h_orbit_label(const Matrix& a);
bool verify_orbit_label(const Matrix& a, const OrbitLabel& label);

}  // namespace en
