#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "bihom/cohomology.hpp"

namespace bihom {

/// A multiplicative BiHom-Lie algebra with a representation, both valid by construction.
struct RandomInstance {
  BiHomLieAlgebra algebra;
  BiHomModule module;
  ActionPair act;
  std::string origin;  // which Lie algebra / representation it was twisted from
};

/// Random valid instances built by twisting small Lie algebras: with commuting
/// Lie endomorphisms alpha, beta of g, [x,y]' = [alpha x, beta y] is a multiplicative
/// BiHom-Lie algebra, and a g-module with compatible twists alpha_V, beta_V gives the
/// actions lambda_l(x,v) = rho(alpha x) beta_V v, lambda_r(v,y) = -rho(beta y) alpha_V v.
/// Free parameters are drawn from {-2,...,2}.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  RandomInstance instance(std::size_t max_n = 3, std::size_t max_m = 3);
  BiHomLieAlgebra algebra(std::size_t max_n = 3) { return instance(max_n, 1).algebra; }

  int entry(int lo = -2, int hi = 2);
  Matrix matrix(std::size_t rows, std::size_t cols);
  Bilinear bilinear(std::size_t left, std::size_t right, std::size_t out);

  /// Random integer combination of a basis (zero vector for an empty basis).
  Vector combination(const SubspaceBasis& basis);

  Matrix cochain1(const BiHomLieAlgebra& l, const BiHomModule& v);
  Bilinear cochain2(const BiHomLieAlgebra& l, const BiHomModule& v);
  Bilinear cocycle(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Re-expresses (L, act) in the basis given by the columns of an invertible matrix p.
void change_basis(BiHomLieAlgebra& l, ActionPair& act, const Matrix& p);

}  // namespace bihom
