#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bihom/linalg.hpp"
#include "bihom/tensor.hpp"

namespace bihom {

/// Structure-constant data (L, [.,.], alpha, beta). The axioms are not enforced
/// on construction; use check_bihom_lie.
struct BiHomLieAlgebra {
  std::string name;
  Bilinear bracket;  // n x n -> n
  Matrix alpha;
  Matrix beta;

  BiHomLieAlgebra() = default;
  /// Throws InputError unless bracket is n x n -> n and both twists are n x n.
  BiHomLieAlgebra(std::string name, Bilinear bracket, Matrix alpha, Matrix beta);

  /// Abelian algebra of dimension n with the given twists.
  static BiHomLieAlgebra abelian(std::string name, Matrix alpha, Matrix beta);

  std::size_t dim() const { return alpha.rows(); }
  bool is_abelian() const { return bracket.is_zero(); }

  friend bool operator==(const BiHomLieAlgebra&, const BiHomLieAlgebra&) = default;
};

/// A linear map between two algebras, given by a (target dim) x (source dim) matrix.
struct AlgebraMap {
  const BiHomLieAlgebra& source;
  const BiHomLieAlgebra& target;
  Matrix matrix;
};

struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;  // 0-based basis indices
  Vector lhs;
  Vector rhs;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct AxiomReport {
  bool passed = true;
  std::vector<Violation> violations;

  void add(Violation v);
  void merge(const AxiomReport& other);
  /// True when no violation's axiom name starts with the given prefix.
  bool holds(std::string_view axiom_prefix) const;
  /// True when every violation's axiom name starts with the given prefix.
  bool passed_ignoring(std::string_view axiom_prefix) const;

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

Vector bracket_eval(const BiHomLieAlgebra& l, const Vector& x, const Vector& y);

AxiomReport check_commuting(const BiHomLieAlgebra& l);
AxiomReport check_skew(const BiHomLieAlgebra& l);
AxiomReport check_bihom_jacobi(const BiHomLieAlgebra& l);
AxiomReport check_multiplicative(const BiHomLieAlgebra& l);

/// All four checks. `passed` means "multiplicative BiHom-Lie algebra";
/// see is_bihom_lie for the weaker status.
AxiomReport check_bihom_lie(const BiHomLieAlgebra& l);

/// Commuting twists, skew-symmetry and BiHom-Jacobi, ignoring multiplicativity.
bool is_bihom_lie(const BiHomLieAlgebra& l);

AxiomReport is_morphism(const AlgebraMap& f);

bool is_subalgebra(const BiHomLieAlgebra& l, const SubspaceBasis& h);
bool is_ideal(const BiHomLieAlgebra& l, const SubspaceBasis& ideal);

}  // namespace bihom
