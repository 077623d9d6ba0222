#pragma once

#include "en/en_hopf.hpp"

namespace en {

struct QTStructure {
  HopfPtr en;
  Matrix a;
  Elem r;  // in E(n)⊗E(n)
};

struct CoQTStructure {
  HopfPtr en;
  Matrix a;
  Bilinear form;
  // Whether the closed-form dual-basis sum matched the transported form.
  bool display_agrees = false;
};

// Σ_η sign(η) a_{p_1 f_η(1)} ... a_{p_s f_η(s)}, by enumerating permutations.
Scalar signed_product_sum(const Matrix& a, std::uint64_t p_mask, std::uint64_t f_mask);

QTStructure build_R(const HopfPtr& en, const Matrix& a);
// Twice the coefficient of x_i⊗cx_j.
Matrix recover_matrix(const Hopf& en, const Elem& r);

// Hexagons, intertwiner, invertibility; Yang-Baxter when with_yang_baxter.
std::vector<std::string> check_qt(const Hopf& h, const Elem& r, bool with_yang_baxter = true);
bool is_triangular(const Hopf& h, const Elem& r);

// R12, R13, R23 and friends: place the two legs of r at positions (p, q) of
// an m-fold tensor power, the other legs being 1.
Elem embed_legs(const Hopf& h, const Elem& r, unsigned m, unsigned p, unsigned q);

// r_A via (φ⊗φ)(R_A); also evaluates the closed-form sum and records agreement.
CoQTStructure build_r(const HopfPtr& en, const Matrix& a);
// The closed-form dual-basis sum for r_A.
Bilinear r_display(const HopfPtr& en, const Matrix& a);
// Transport of an element of E(n)⊗E(n) to a bilinear form through φ⊗φ.
Bilinear transport(const HopfPtr& en, const Elem& r);
// Matrix (r(x_i⊗x_j)).
Matrix restrict_to_generators(const Bilinear& r);

// r(xy⊗z) = r(x⊗z1) r(y⊗z2), r(x⊗yz) = r(x1⊗z) r(x2⊗y),
// r(x1⊗y1) x2 y2 = y1 x1 r(x2⊗y2), plus convolution invertibility.
std::vector<std::string> check_coqt(const Bilinear& r);
// r∘τ * r = ε⊗ε.
bool is_cotriangular(const Bilinear& r);

}  // namespace en
