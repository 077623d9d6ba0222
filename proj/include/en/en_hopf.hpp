#pragma once

#include "en/algebra.hpp"

namespace en {

// Algebra generated by v_0..v_{m-1} with v_a v_b + v_b v_a = 2 g_ab. Basis
// element k is the ordered product of the v_a with bit a set in k.
Algebra clifford_algebra(const Matrix& g, const std::vector<std::string>& generator_names);

// Basis of E(n): index = a | (P << 1) for the monomial c^a x_P, where bit i-1
// of the mask P marks x_i. Both k[Z_2] and E(m) for m < n are leading blocks.
inline Index en_index(unsigned c_exp, std::uint64_t p_mask) { return c_exp | (p_mask << 1); }
inline unsigned en_c_exp(Index i) { return static_cast<unsigned>(i & 1); }
inline std::uint64_t en_mask(Index i) { return i >> 1; }
inline unsigned en_degree(Index i) { return static_cast<unsigned>(__builtin_popcountll(i >> 1)); }
std::string en_label(Index i);

// E(n) as a Hopf algebra: c^2 = 1, x_i^2 = 0, c x_i = -x_i c,
// x_i x_j = -x_j x_i, Δ(c) = c⊗c, Δ(x_i) = 1⊗x_i + x_i⊗c, S(c) = c,
// S(x_i) = c x_i.
HopfPtr build_en(unsigned n, const Field& f = {});
// n recovered from dim E(n) = 2^(n+1).
unsigned en_rank(const Hopf& h);

Elem en_c(const Hopf& h);
Elem en_x(const Hopf& h, unsigned i);  // 1-based

// Image of a basis-indexed linear map: column j of m is the image of e_j.
Elem apply(const Matrix& m, const Elem& a);
Matrix matrix_of(const std::vector<Elem>& images, std::size_t rows, const Field& f);

struct DualityIso {
  HopfPtr dual;  // E(n)* on the dual basis
  Matrix phi;    // E(n) -> E(n)*
  Matrix phi_inverse;
};

// φ(1) = 1* + c*, φ(c) = 1* - c*, φ(x_j) = x_j* + (c x_j)*, extended
// multiplicatively into the convolution algebra E(n)*.
DualityIso duality_iso(const HopfPtr& en);

// α_T(c) = c, α_T(x_i) = Σ_j t_ij x_j. Composition: α_T ∘ α_S = α_{S·T}.
Matrix hopf_automorphism(const Hopf& en, const Matrix& t);

}  // namespace en
