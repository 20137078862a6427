#include "bihom/io.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <utility>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

void expect_object(const Json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(where, "unknown key \"" + key + "\"");
  }
}

const Json& require(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) fail(where, "missing key \"" + key + "\"");
  return j.at(key);
}

void expect_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
}

std::size_t index_from_json(const Json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected a basis index");
  const auto value = j.get<long long>();
  if (value < 0 || static_cast<std::size_t>(value) >= bound)
    fail(where, "index " + std::to_string(value) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(value);
}

std::size_t dim_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative dimension");
  return j.get<std::size_t>();
}

std::string at(const std::string& where, const std::string& key) { return where + "." + key; }
std::string at(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

std::string reading_name(SecondAxiomReading r) {
  return r == SecondAxiomReading::kLeftAction ? "left-action" : "right-action";
}

BiHomLieAlgebra algebra_member(const Json& j, const std::filesystem::path& base_dir, const std::string& where) {
  if (j.is_string()) {
    const auto path = base_dir / j.get<std::string>();
    return algebra_from_json(load_json(path), path.string());
  }
  return algebra_from_json(j, where);
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (!j.is_string()) fail(where, "expected a rational (string \"p/q\" or integer)");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

Vector vector_from_json(const Json& j, std::size_t length, const std::string& where) {
  expect_array(j, where);
  if (j.size() != length)
    fail(where, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
  Vector v;
  v.reserve(length);
  for (std::size_t k = 0; k < length; ++k) v.push_back(rational_from_json(j[k], at(where, k)));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  expect_array(j, where);
  if (j.size() != rows)
    fail(where, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " +
                    std::to_string(j.size()) + " rows");
  std::vector<Vector> row_list;
  for (std::size_t r = 0; r < rows; ++r) row_list.push_back(vector_from_json(j[r], cols, at(where, r)));
  return Matrix::from_rows(row_list, cols);
}

Json bilinear_to_json(const Bilinear& b) {
  Json out = Json::array();
  for (std::size_t i = 0; i < b.left_dim(); ++i)
    for (std::size_t j = 0; j < b.right_dim(); ++j) {
      const Vector v = b.value(i, j);
      if (!is_zero(v)) out.push_back(Json::array({i, j, vector_to_json(v)}));
    }
  return out;
}

Bilinear bilinear_from_json(const Json& j, std::size_t left, std::size_t right, std::size_t out,
                            const std::string& where) {
  expect_array(j, where);
  Bilinear b(left, right, out);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string here = at(where, k);
    const Json& entry = j[k];
    if (!entry.is_array() || entry.size() != 3) fail(here, "expected [i, j, [values]]");
    const std::size_t a = index_from_json(entry[0], left, at(here, 0));
    const std::size_t c = index_from_json(entry[1], right, at(here, 1));
    if (!seen.emplace(a, c).second)
      fail(here, "duplicate entry for (" + std::to_string(a) + ", " + std::to_string(c) + ")");
    b.set_value(a, c, vector_from_json(entry[2], out, at(here, 2)));
  }
  return b;
}

Json algebra_to_json(const BiHomLieAlgebra& l) {
  return Json{{"name", l.name},
              {"dim", l.dim()},
              {"bracket", bilinear_to_json(l.bracket)},
              {"alpha", matrix_to_json(l.alpha)},
              {"beta", matrix_to_json(l.beta)}};
}

BiHomLieAlgebra algebra_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"name", "dim", "bracket", "alpha", "beta"});
  const std::size_t n = dim_from_json(require(j, "dim", where), at(where, "dim"));
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(at(where, "name"), "expected a string");
    name = j["name"].get<std::string>();
  }
  Bilinear bracket = j.contains("bracket") ? bilinear_from_json(j["bracket"], n, n, n, at(where, "bracket"))
                                           : Bilinear(n, n, n);
  Matrix alpha = matrix_from_json(require(j, "alpha", where), n, n, at(where, "alpha"));
  Matrix beta = matrix_from_json(require(j, "beta", where), n, n, at(where, "beta"));
  return BiHomLieAlgebra(std::move(name), std::move(bracket), std::move(alpha), std::move(beta));
}

Json representation_to_json(const BiHomModule& v, const ActionPair& act) {
  return Json{{"module", Json{{"dim", v.dim()},
                              {"alpha_v", matrix_to_json(v.alpha_v())},
                              {"beta_v", matrix_to_json(v.beta_v())}}},
              {"lambda_l", bilinear_to_json(act.left)},
              {"lambda_r", bilinear_to_json(act.right)}};
}

Representation representation_from_json(const Json& j, std::size_t n, const std::string& where) {
  expect_object(j, where, {"module", "lambda_l", "lambda_r"});
  const std::string mw = at(where, "module");
  const Json& mj = require(j, "module", where);
  expect_object(mj, mw, {"dim", "alpha_v", "beta_v"});
  const std::size_t m = dim_from_json(require(mj, "dim", mw), at(mw, "dim"));
  Matrix alpha_v = matrix_from_json(require(mj, "alpha_v", mw), m, m, at(mw, "alpha_v"));
  Matrix beta_v = matrix_from_json(require(mj, "beta_v", mw), m, m, at(mw, "beta_v"));
  BiHomModule module;
  try {
    module = BiHomModule(std::move(alpha_v), std::move(beta_v));
  } catch (const InputError& e) {
    fail(mw, e.what());
  }
  ActionPair act = ActionPair::trivial(n, m);
  if (j.contains("lambda_l")) act.left = bilinear_from_json(j["lambda_l"], n, m, m, at(where, "lambda_l"));
  if (j.contains("lambda_r")) act.right = bilinear_from_json(j["lambda_r"], m, n, m, at(where, "lambda_r"));
  return {std::move(module), std::move(act)};
}

Json cochain_to_json(const Bilinear& theta) { return Json{{"theta", bilinear_to_json(theta)}}; }

Bilinear cochain_from_json(const Json& j, std::size_t n, std::size_t m, const std::string& where) {
  expect_object(j, where, {"theta"});
  return bilinear_from_json(require(j, "theta", where), n, n, m, at(where, "theta"));
}

Json extension_to_json(const ShortExactSequence& e, const std::optional<Section>& section) {
  Json out{{"V", algebra_to_json(e.v)},
           {"M", algebra_to_json(e.m)},
           {"L", algebra_to_json(e.l)},
           {"i", matrix_to_json(e.i)},
           {"pi", matrix_to_json(e.pi)}};
  if (section) out["section"] = matrix_to_json(section->matrix);
  return out;
}

ExtensionDocument extension_from_json(const Json& j, const std::filesystem::path& base_dir, const std::string& where) {
  expect_object(j, where, {"V", "M", "L", "i", "pi", "section"});
  ExtensionDocument doc;
  auto& e = doc.sequence;
  e.v = algebra_member(require(j, "V", where), base_dir, at(where, "V"));
  e.m = algebra_member(require(j, "M", where), base_dir, at(where, "M"));
  e.l = algebra_member(require(j, "L", where), base_dir, at(where, "L"));
  e.i = matrix_from_json(require(j, "i", where), e.m.dim(), e.v.dim(), at(where, "i"));
  e.pi = matrix_from_json(require(j, "pi", where), e.l.dim(), e.m.dim(), at(where, "pi"));
  if (j.contains("section"))
    doc.section = Section{matrix_from_json(j["section"], e.m.dim(), e.l.dim(), at(where, "section"))};
  return doc;
}

Json split_data_to_json(const SplitExtensionData& d) {
  Json rep = representation_to_json(d.v_module, d.act);
  return Json{{"L", algebra_to_json(d.l)},
              {"module", rep["module"]},
              {"lambda_l", rep["lambda_l"]},
              {"lambda_r", rep["lambda_r"]},
              {"theta", bilinear_to_json(d.theta)},
              {"mu", bilinear_to_json(d.mu)}};
}

SplitExtensionData split_data_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"L", "module", "lambda_l", "lambda_r", "theta", "mu"});
  SplitExtensionData d;
  d.l = algebra_from_json(require(j, "L", where), at(where, "L"));
  Json rep{{"module", require(j, "module", where)}};
  if (j.contains("lambda_l")) rep["lambda_l"] = j["lambda_l"];
  if (j.contains("lambda_r")) rep["lambda_r"] = j["lambda_r"];
  auto [module, act] = representation_from_json(rep, d.l.dim(), where);
  d.v_module = std::move(module);
  d.act = std::move(act);
  const std::size_t n = d.l.dim(), m = d.v_module.dim();
  d.theta = j.contains("theta") ? bilinear_from_json(j["theta"], n, n, m, at(where, "theta")) : Bilinear(n, n, m);
  d.mu = j.contains("mu") ? bilinear_from_json(j["mu"], m, m, m, at(where, "mu")) : Bilinear(m, m, m);
  return d;
}

std::string to_string(SecondAxiomReading reading) { return reading_name(reading); }

Config config_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"second_axiom_reading"});
  Config c;
  if (j.contains("second_axiom_reading")) {
    const Json& r = j["second_axiom_reading"];
    const std::string rw = at(where, "second_axiom_reading");
    if (!r.is_string()) fail(rw, "expected a string");
    if (r == "left-action")
      c.reading = SecondAxiomReading::kLeftAction;
    else if (r == "right-action")
      c.reading = SecondAxiomReading::kRightAction;
    else
      fail(rw, "expected \"left-action\" or \"right-action\"");
  }
  return c;
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(Json{{"axiom", v.axiom},
                              {"witness", v.witness},
                              {"lhs", vector_to_json(v.lhs)},
                              {"rhs", vector_to_json(v.rhs)}});
  return Json{{"passed", r.passed}, {"violations", violations}};
}

AxiomReport axiom_report_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"passed", "violations"});
  AxiomReport r;
  const Json& passed = require(j, "passed", where);
  if (!passed.is_boolean()) fail(at(where, "passed"), "expected a boolean");
  const Json& vs = require(j, "violations", where);
  expect_array(vs, at(where, "violations"));
  for (std::size_t k = 0; k < vs.size(); ++k) {
    const std::string here = at(at(where, "violations"), k);
    expect_object(vs[k], here, {"axiom", "witness", "lhs", "rhs"});
    Violation v;
    const Json& axiom = require(vs[k], "axiom", here);
    if (!axiom.is_string()) fail(at(here, "axiom"), "expected a string");
    v.axiom = axiom.get<std::string>();
    const Json& witness = require(vs[k], "witness", here);
    expect_array(witness, at(here, "witness"));
    for (std::size_t w = 0; w < witness.size(); ++w)
      v.witness.push_back(index_from_json(witness[w], static_cast<std::size_t>(-1), at(at(here, "witness"), w)));
    const Json& lhs = require(vs[k], "lhs", here);
    const Json& rhs = require(vs[k], "rhs", here);
    v.lhs = vector_from_json(lhs, lhs.is_array() ? lhs.size() : 0, at(here, "lhs"));
    v.rhs = vector_from_json(rhs, rhs.is_array() ? rhs.size() : 0, at(here, "rhs"));
    r.violations.push_back(std::move(v));
  }
  r.passed = passed.get<bool>();
  return r;
}

Json cohomology_to_json(const CohomologyResult& r, std::size_t n, std::size_t m) {
  auto basis = [](const SubspaceBasis& b) {
    Json out = Json::array();
    for (const auto& v : b.vectors()) out.push_back(vector_to_json(v));
    return out;
  };
  Json reps = Json::array();
  for (const auto& t : r.representatives) reps.push_back(bilinear_to_json(t));
  return Json{{"n", n},
              {"m", m},
              {"dim_Z2", r.z2.dim()},
              {"dim_B2", r.b2.dim()},
              {"dim_H2", r.h2_dim},
              {"z2_basis", basis(r.z2)},
              {"b2_basis", basis(r.b2)},
              {"representatives", reps}};
}

CohomologyResult cohomology_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"n", "m", "dim_Z2", "dim_B2", "dim_H2", "z2_basis", "b2_basis", "representatives"});
  const std::size_t n = dim_from_json(require(j, "n", where), at(where, "n"));
  const std::size_t m = dim_from_json(require(j, "m", where), at(where, "m"));
  const std::size_t ambient = m * n * n;
  auto basis = [&](const std::string& key, const std::string& dim_key) {
    const std::string bw = at(where, key);
    const Json& arr = require(j, key, where);
    expect_array(arr, bw);
    const std::size_t dim = dim_from_json(require(j, dim_key, where), at(where, dim_key));
    if (arr.size() != dim) fail(bw, "basis size does not match " + dim_key);
    std::vector<Vector> vs;
    for (std::size_t k = 0; k < arr.size(); ++k) vs.push_back(vector_from_json(arr[k], ambient, at(bw, k)));
    return SubspaceBasis(ambient, std::move(vs));
  };
  CohomologyResult r;
  r.z2 = basis("z2_basis", "dim_Z2");
  r.b2 = basis("b2_basis", "dim_B2");
  r.h2_dim = dim_from_json(require(j, "dim_H2", where), at(where, "dim_H2"));
  const Json& reps = require(j, "representatives", where);
  expect_array(reps, at(where, "representatives"));
  if (reps.size() != r.h2_dim) fail(at(where, "representatives"), "count does not match dim_H2");
  for (std::size_t k = 0; k < reps.size(); ++k)
    r.representatives.push_back(bilinear_from_json(reps[k], n, n, m, at(at(where, "representatives"), k)));
  return r;
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError(path.string() + ": cannot write file");
  out << j.dump(2) << '\n';
}

}  // namespace bihom
