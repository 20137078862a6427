#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bihom/cohomology.hpp"

namespace bihom {

/// V --i--> M --pi--> L. Exactness is checked by check_exact, not on construction.
struct ShortExactSequence {
  BiHomLieAlgebra v;
  BiHomLieAlgebra m;
  BiHomLieAlgebra l;
  Matrix i;   // dim M x dim V
  Matrix pi;  // dim L x dim M

  AlgebraMap inclusion() const { return {v, m, i}; }
  AlgebraMap projection() const { return {m, l, pi}; }
};

/// The pieces delta + lambda_l + lambda_r + theta + mu of a bracket on L + V.
struct SplitExtensionData {
  BiHomLieAlgebra l;
  BiHomModule v_module;
  ActionPair act;
  Bilinear theta;  // n x n -> m
  Bilinear mu;     // m x m -> m, zero in the abelian case

  friend bool operator==(const SplitExtensionData&, const SplitExtensionData&) = default;
};

/// Right inverse s of pi, as a (dim M) x (dim L) matrix.
struct Section {
  Matrix matrix;
};

enum class Decision { kYes, kNo, kUndecided };
std::string to_string(Decision d);

AxiomReport check_exact(const ShortExactSequence& e);

struct ExtensionFlags {
  Decision trivial = Decision::kNo;
  Decision split = Decision::kNo;
  bool central = false;
  bool abelian = false;
};

/// Throws PreconditionError if e is not exact.
ExtensionFlags classify(const ShortExactSequence& e);

struct SemidirectSum {
  BiHomLieAlgebra algebra;
  ShortExactSequence sequence;
};

/// L + V with bracket delta + theta + lambda_l + lambda_r + mu, block-diagonal twists
/// and the canonical inclusion/projection. Validity is reported by the checks, not enforced.
SemidirectSum semidirect_sum(const SplitExtensionData& data);

/// Bracket on L + V assembled from the pieces (as used by semidirect_sum).
Bilinear semidirect_bracket(const SplitExtensionData& data);

/// Sections s = particular + sum_k r_k directions[k] with pi s = id and
/// s intertwining the twists of M and L.
struct SectionFamily {
  Matrix particular;
  std::vector<Matrix> directions;

  Matrix at(const std::vector<Rational>& coefficients) const;
};

std::optional<SectionFamily> intertwining_sections(const ShortExactSequence& e);

enum class Complement { kSubalgebra, kIdeal };

struct SectionSearch {
  Decision status = Decision::kNo;
  std::optional<Section> section;
};

/// Searches for a section whose image is a BiHom subalgebra (or ideal) complementary
/// to ker pi. Exact when the kernel bracket does not reach the closure conditions;
/// otherwise a bounded enumeration that reports kUndecided when it finds nothing.
SectionSearch find_section(const ShortExactSequence& e, Complement complement = Complement::kSubalgebra);

/// Transports the bracket of M to L + V along x + v -> s(x) + i(v) and splits it
/// into pieces. Throws PreconditionError unless s is a right inverse of pi that
/// intertwines the twists.
SplitExtensionData decompose_split_extension(const ShortExactSequence& e, const Section& s);

/// Phi: M1 -> M2 bijective morphism with phi i1 = i2 phi_v and pi2 phi = s_l pi1.
AxiomReport check_equivalence(const ShortExactSequence& e1, const ShortExactSequence& e2, const Matrix& phi,
                              const Matrix& phi_v, const Matrix& s_l);

struct CohomologousExtensions {
  ShortExactSequence first;
  ShortExactSequence second;
  Matrix phi;  // x + v -> x - h(x) + v
};

/// Throws PreconditionError unless d1(h) = theta_prime - theta.
CohomologousExtensions extensions_from_cohomologous_cocycles(const BiHomLieAlgebra& l, const BiHomModule& v,
                                                             const ActionPair& act, const Bilinear& theta,
                                                             const Bilinear& theta_prime, const Matrix& h);

struct ExtClass {
  SplitExtensionData data;
  Section section;
  SubspaceBasis b2;
};

/// Cocycle of an abelian extension together with B2. Uses the given section or the
/// particular member of intertwining_sections. Throws NotSplitError when no
/// twist-compatible section exists and PreconditionError for a non-abelian kernel.
ExtClass ext_class(const ShortExactSequence& e, const std::optional<Section>& section = std::nullopt);

struct ExtensionComparison {
  bool equivalent = false;
  std::string reason;
  std::optional<Matrix> h;    // d1(h) = theta2 - theta1
  std::optional<Matrix> phi;  // M1 -> M2
};

/// Decides equivalence (with identity on V and L) of two abelian extensions of
/// the same L by the same module through their cocycle classes.
ExtensionComparison compare_extensions(const ShortExactSequence& e1, const ShortExactSequence& e2);

}  // namespace bihom
