#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "bihom/cohomology.hpp"
#include "bihom/extension.hpp"

namespace bihom {

using Json = nlohmann::ordered_json;

// File formats. Rationals are written as strings ("3", "-1/2"); integers are also
// accepted on input. Basis indices are 0-based. Sparse tensor entries are
// [i, j, [values...]] triples; absent pairs are zero, repeated pairs are rejected.
// Every reader takes a `where` prefix used in InputError messages.

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, std::size_t length, const std::string& where);

/// Array of rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

/// Sparse [[i, j, [values]]] list, skipping zero values.
Json bilinear_to_json(const Bilinear& b);
Bilinear bilinear_from_json(const Json& j, std::size_t left, std::size_t right, std::size_t out,
                            const std::string& where);

/// {"name", "dim", "bracket", "alpha", "beta"}
Json algebra_to_json(const BiHomLieAlgebra& l);
BiHomLieAlgebra algebra_from_json(const Json& j, const std::string& where);

struct Representation {
  BiHomModule module;
  ActionPair act;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// {"module": {"dim", "alpha_v", "beta_v"}, "lambda_l", "lambda_r"}; n is dim L.
Json representation_to_json(const BiHomModule& v, const ActionPair& act);
Representation representation_from_json(const Json& j, std::size_t n, const std::string& where);

/// {"theta": [[i, j, [values]]]}
Json cochain_to_json(const Bilinear& theta);
Bilinear cochain_from_json(const Json& j, std::size_t n, std::size_t m, const std::string& where);

struct ExtensionDocument {
  ShortExactSequence sequence;
  std::optional<Section> section;
};

/// {"V", "M", "L", "i", "pi", "section"?}. Algebras are inline objects or paths
/// resolved against base_dir.
Json extension_to_json(const ShortExactSequence& e, const std::optional<Section>& section = std::nullopt);
ExtensionDocument extension_from_json(const Json& j, const std::filesystem::path& base_dir, const std::string& where);

/// {"L", "module", "lambda_l", "lambda_r", "theta", "mu"}
Json split_data_to_json(const SplitExtensionData& d);
SplitExtensionData split_data_from_json(const Json& j, const std::string& where);

struct Config {
  SecondAxiomReading reading = SecondAxiomReading::kLeftAction;
};

/// {"second_axiom_reading": "left-action" | "right-action"}
Config config_from_json(const Json& j, const std::string& where);
std::string to_string(SecondAxiomReading reading);

Json axiom_report_to_json(const AxiomReport& r);
AxiomReport axiom_report_from_json(const Json& j, const std::string& where);

/// {"n", "m", "dim_Z2", "dim_B2", "dim_H2", "z2_basis", "b2_basis", "representatives"}
Json cohomology_to_json(const CohomologyResult& r, std::size_t n, std::size_t m);
CohomologyResult cohomology_from_json(const Json& j, const std::string& where);

/// Parses a file; syntax errors and missing files become InputError.
Json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const Json& j);

}  // namespace bihom
