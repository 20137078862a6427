#pragma once

#include <optional>
#include <vector>

#include "bihom/representation.hpp"

namespace bihom {

/// Cyclic composition of bilinear maps on a space M with twists alpha_M, beta_M:
/// (f o g)(a,b,c) = f(b^2 a, g(b b, a c)) + f(b^2 b, g(b c, a a)) + f(b^2 c, g(b a, a b)),
/// writing b for beta_M and a for alpha_M.
Trilinear circle(const Bilinear& f, const Bilinear& g, const Matrix& alpha_m, const Matrix& beta_m);

/// [f,g] = f o g + g o f.
Trilinear bracket2(const Bilinear& f, const Bilinear& g, const Matrix& alpha_m, const Matrix& beta_m);

/// [f,f] == 0, i.e. f satisfies the BiHom-Jacobi identity for the given twists.
bool is_bihom_bracket(const Bilinear& f, const Matrix& alpha_m, const Matrix& beta_m);

/// Matrix of f -> D1(f) from Hom(L,V) coordinates (m*n) to bilinear coordinates (m*n*n).
Matrix d1_matrix(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act);

/// D1(f)(x,y) = -f([x,y]) + lambda_l(x, f y) + lambda_r(f x, y).
/// Throws PreconditionError if f does not intertwine the twists.
Bilinear d1(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act, const Matrix& f);

/// Alternating-sign 2-cocycle operator; theta is a cocycle iff the result is zero.
Trilinear d2(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act, const Bilinear& theta);

/// Matrix of theta -> d2(theta) from m*n*n to m*n*n*n coordinates.
Matrix d2_matrix(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act);

/// [delta + lambda_l + lambda_r, theta] computed on the semidirect space L + V,
/// with theta extended by zero; result has dim n+m.
Trilinear d2_operator_form(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act,
                           const Bilinear& theta);

/// True when d2_operator_form restricted to L^3 equals d2 and vanishes on every
/// triple involving V.
bool d2_forms_agree(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act, const Bilinear& theta);

/// theta is a 2-cochain and d2(theta) = 0.
bool is_cocycle(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act, const Bilinear& theta);

struct CohomologyResult {
  SubspaceBasis z2;
  SubspaceBasis b2;
  std::size_t h2_dim = 0;
  std::vector<Bilinear> representatives;
};

SubspaceBasis compute_z2(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act);
SubspaceBasis compute_b2(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act);

/// Throws ContainmentError if B2 is not inside Z2.
CohomologyResult compute_h2(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act);

bool verify_d2_d1_zero(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act, const Matrix& f);

/// Some 1-cochain h with d1(h) = theta_prime - theta, or nullopt.
/// Throws PreconditionError when either input is not a 2-cocycle.
std::optional<Matrix> cocycles_cohomologous(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act,
                                            const Bilinear& theta, const Bilinear& theta_prime);

}  // namespace bihom
