#pragma once

#include "bihom/algebra.hpp"

namespace bihom {

/// A vector space V with commuting twists alpha_V, beta_V.
class BiHomModule {
 public:
  BiHomModule() = default;
  /// Throws InputError unless both twists are square of equal size and commute.
  BiHomModule(Matrix alpha_v, Matrix beta_v);

  static BiHomModule identity(std::size_t m);

  std::size_t dim() const { return alpha_v_.rows(); }
  const Matrix& alpha_v() const { return alpha_v_; }
  const Matrix& beta_v() const { return beta_v_; }

  friend bool operator==(const BiHomModule&, const BiHomModule&) = default;

 private:
  Matrix alpha_v_;
  Matrix beta_v_;
};

/// Left action L x V -> V and right action V x L -> V.
struct ActionPair {
  Bilinear left;   // n x m -> m
  Bilinear right;  // m x n -> m

  static ActionPair trivial(std::size_t n, std::size_t m);
  friend bool operator==(const ActionPair&, const ActionPair&) = default;
};

/// Which well-typed term replaces the ill-typed last summand of the second
/// representation axiom. kLeftAction uses lambda_l(beta^2 y, lambda_l(beta x, alpha_V v));
/// kRightAction uses lambda_l(beta^2 y, lambda_r(beta_V v, alpha x)).
enum class SecondAxiomReading { kLeftAction, kRightAction };

Vector action_eval_left(const ActionPair& act, const Vector& x, const Vector& v);
Vector action_eval_right(const ActionPair& act, const Vector& v, const Vector& x);

/// Throws InputError when the action tensors do not have shapes n x m -> m and m x n -> m.
void require_action_shapes(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act);

/// Axioms "rep-interchange" (lambda_r(beta_V v, alpha y) = -lambda_l(beta y, alpha_V v))
/// and "rep-compatibility" on all basis tuples.
AxiomReport check_representation(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act,
                                 SecondAxiomReading reading = SecondAxiomReading::kLeftAction);

/// 1-cochains are m x n matrices F (coordinates: row-major entries) with
/// F alpha = alpha_V F and F beta = beta_V F.
SubspaceBasis cochain1_basis(const BiHomLieAlgebra& l, const BiHomModule& v);
bool is_cochain1(const BiHomLieAlgebra& l, const BiHomModule& v, const Matrix& f);
Matrix cochain1_from_coordinates(const Vector& coords, std::size_t m, std::size_t n);

/// 2-cochains are bilinear maps L x L -> V (coordinates: Bilinear layout) with
/// theta(beta e_i, alpha e_j) + theta(beta e_j, alpha e_i) = 0.
SubspaceBasis cochain2_basis(const BiHomLieAlgebra& l, const BiHomModule& v);
bool is_cochain2(const BiHomLieAlgebra& l, const BiHomModule& v, const Bilinear& theta);
Bilinear cochain2_from_coordinates(const Vector& coords, std::size_t n, std::size_t m);

}  // namespace bihom
