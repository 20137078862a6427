#include <string>

#include "bihom/commands.hpp"
#include "bihom/errors.hpp"
#include "bihom/generator.hpp"
#include "builders.hpp"
#include "doctest.h"

using namespace bihom;
using namespace build;

namespace {

const path kFixtures = path(BIHOM_SOURCE_DIR) / "fixtures";

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

Json algebra_doc() { return Json::parse(R"({"name": "x", "dim": 2, "bracket": [[0, 1, ["0", "1"]]],
                                           "alpha": [["1", "0"], ["0", "1"]], "beta": [[1, 0], [0, "2/4"]]})"); }

}  // namespace

TEST_CASE("algebra documents") {
  const auto l = algebra_from_json(algebra_doc(), "doc");
  CHECK(l.beta(1, 1) == Rational(1, 2));
  CHECK(l.bracket.value(0, 1) == Vector{0, 1});
  CHECK(algebra_from_json(algebra_to_json(l), "doc") == l);

  Json unknown = algebra_doc();
  unknown["extra"] = 1;
  CHECK(error_of([&] { algebra_from_json(unknown, "doc"); }) == "doc: unknown key \"extra\"");

  Json dup = algebra_doc();
  dup["bracket"].push_back(Json::parse(R"([0, 1, ["1", "0"]])"));
  CHECK(error_of([&] { algebra_from_json(dup, "doc"); }).find("duplicate") != std::string::npos);

  Json shape = algebra_doc();
  shape["alpha"] = Json::parse(R"([["1", "0"]])");
  CHECK(error_of([&] { algebra_from_json(shape, "doc"); }).rfind("doc.alpha:", 0) == 0);

  Json rational = algebra_doc();
  rational["beta"][1][1] = "1/0";
  CHECK(error_of([&] { algebra_from_json(rational, "doc"); }).rfind("doc.beta[1][1]:", 0) == 0);
  rational["beta"][1][1] = 0.5;
  CHECK_THROWS_AS(algebra_from_json(rational, "doc"), InputError);

  Json index = algebra_doc();
  index["bracket"][0][1] = 2;
  CHECK(error_of([&] { algebra_from_json(index, "doc"); }).find("out of range") != std::string::npos);

  Json missing = algebra_doc();
  missing.erase("alpha");
  CHECK_THROWS_AS(algebra_from_json(missing, "doc"), InputError);
}

TEST_CASE("representation, cochain, config and extension documents") {
  InstanceGenerator gen(53);
  for (int trial = 0; trial < 30; ++trial) {
    const RandomInstance inst = gen.instance();
    const std::size_t n = inst.algebra.dim(), m = inst.module.dim();
    const Representation r = representation_from_json(representation_to_json(inst.module, inst.act), n, "rep");
    CHECK(r.module == inst.module);
    CHECK(r.act == inst.act);
    const Bilinear theta = gen.cochain2(inst.algebra, inst.module);
    CHECK(cochain_from_json(cochain_to_json(theta), n, m, "c") == theta);

    const SplitExtensionData data{inst.algebra, inst.module, inst.act, theta, Bilinear(m, m, m)};
    CHECK(split_data_from_json(split_data_to_json(data), "d") == data);

    const auto sum = semidirect_sum(data);
    const auto doc = extension_from_json(extension_to_json(sum.sequence, Section{Matrix(n + m, n)}), ".", "e");
    CHECK(doc.sequence.m == sum.sequence.m);
    CHECK(doc.sequence.i == sum.sequence.i);
    CHECK(doc.sequence.pi == sum.sequence.pi);
    REQUIRE(doc.section);
    CHECK(doc.section->matrix == Matrix(n + m, n));
  }

  const Json bad_rep = Json::parse(R"({"module": {"dim": 1, "alpha_v": [["1"]], "beta_v": [["1"]]},
                                       "lambda_l": [[0, 0, ["1", "2"]]]})");
  CHECK_THROWS_AS(representation_from_json(bad_rep, 2, "rep"), InputError);
  const Json noncommuting = Json::parse(R"({"module": {"dim": 2, "alpha_v": [["0", "1"], ["0", "0"]],
                                            "beta_v": [["1", "0"], ["0", "2"]]}})");
  CHECK(error_of([&] { representation_from_json(noncommuting, 2, "rep"); }).rfind("rep.module:", 0) == 0);

  CHECK(config_from_json(Json::parse(R"({"second_axiom_reading": "right-action"})"), "c").reading ==
        SecondAxiomReading::kRightAction);
  CHECK(config_from_json(Json::object(), "c").reading == SecondAxiomReading::kLeftAction);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"second_axiom_reading": "sideways"})"), "c"), InputError);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"reading": "left-action"})"), "c"), InputError);

  const auto heis = extension_from_json(load_json(kFixtures / "heisenberg_extension.json"), kFixtures, "h");
  CHECK(heis.sequence.m.dim() == 3);
  CHECK_THROWS_AS(load_json(kFixtures / "truncated.json"), InputError);
  CHECK_THROWS_AS(load_json(kFixtures / "no_such_file.json"), InputError);
}

TEST_CASE("structured payloads round-trip") {
  InstanceGenerator gen(59);
  for (int trial = 0; trial < 30; ++trial) {
    const RandomInstance inst = gen.instance();
    BiHomLieAlgebra l = inst.algebra;
    if (trial % 2) l.bracket = gen.bilinear(l.dim(), l.dim(), l.dim());
    const AxiomReport r = check_bihom_lie(l);
    CHECK(axiom_report_from_json(axiom_report_to_json(r), "r") == r);

    const auto h = compute_h2(inst.algebra, inst.module, inst.act);
    const auto back =
        cohomology_from_json(cohomology_to_json(h, inst.algebra.dim(), inst.module.dim()), "h");
    CHECK(back.z2.vectors() == h.z2.vectors());
    CHECK(back.b2.vectors() == h.b2.vectors());
    CHECK(back.h2_dim == h.h2_dim);
    CHECK(back.representatives == h.representatives);

    const Report report{"cohomology", Status::kPass, cohomology_to_json(h, inst.algebra.dim(), inst.module.dim())};
    CHECK(report_from_json(Json::parse(render_json(report))) == report);
  }
}

TEST_CASE("reports and exit codes") {
  CHECK(exit_code(Status::kPass) == 0);
  CHECK(exit_code(Status::kFail) == 1);
  CHECK(exit_code(Status::kError) == 2);
  CHECK(exit_code(Status::kUndecided) == 3);
  for (auto s : {Status::kPass, Status::kFail, Status::kError, Status::kUndecided}) CHECK(status_from_string(to_string(s)) == s);

  const Report ok = cmd_check(kFixtures / "abelian2.json");
  CHECK(ok.status == Status::kPass);
  const Report fail = cmd_check(kFixtures / "nonmult.json");
  CHECK(fail.status == Status::kFail);
  CHECK(render_text(fail).find("multiplicative-beta   fail  witness (e1, e2)") != std::string::npos);
  CHECK(cmd_check(kFixtures / "truncated.json").status == Status::kError);

  const Report h = cmd_cohomology(kFixtures / "lie2.json", kFixtures / "rep_trivial_m1.json", {});
  CHECK(render_text(h).find("Z2=1 B2=1 H2=0") != std::string::npos);
  const Report h_ab = cmd_cohomology(kFixtures / "abelian2.json", kFixtures / "rep_trivial_m1.json", {});
  CHECK(render_text(h_ab).find("Z2=1 B2=0 H2=1") != std::string::npos);
  CHECK(cmd_cohomology(kFixtures / "abelian2.json", kFixtures / "rep_bad_shape.json", {}).status == Status::kError);
  const Config right{SecondAxiomReading::kRightAction};
  CHECK(cmd_cohomology(kFixtures / "lie2.json", kFixtures / "rep_adjoint_lie2.json", right).status == Status::kFail);

  CHECK(cmd_semidirect(kFixtures / "abelian2.json", kFixtures / "rep_trivial_m1.json", kFixtures / "theta_nonskew.json",
                       std::nullopt, std::nullopt, {})
            .status == Status::kFail);
  CHECK(cmd_decompose(kFixtures / "heisenberg_extension.json", std::nullopt).status == Status::kFail);
  CHECK(cmd_decompose(kFixtures / "pi_fail_extension.json", std::nullopt).status == Status::kFail);
  const Report eq = cmd_equiv_extensions(kFixtures / "lie2_theta0_extension.json", kFixtures / "lie2_thetaminus_extension.json");
  CHECK(eq.status == Status::kPass);
  CHECK(eq.payload["phi"] == matrix_to_json(mat(3, 3, {1, 0, 0, 0, 1, 0, 0, -1, 1})));
  CHECK(cmd_equiv_extensions(kFixtures / "abelian2_theta0_extension.json", kFixtures / "abelian2_theta1_extension.json")
            .status == Status::kFail);
}

TEST_CASE("decompose recovers the data written by semidirect") {
  const Report d = cmd_decompose(kFixtures / "central_lie2_extension.json", std::nullopt);
  REQUIRE(d.status == Status::kPass);
  const auto data = split_data_from_json(d.payload["data"], "data");
  CHECK(data.theta == theta12(1));
  CHECK(data.act == ActionPair::trivial(2, 1));
  CHECK(data.mu.is_zero());
  CHECK(data.l.bracket == lie2().bracket);
}
