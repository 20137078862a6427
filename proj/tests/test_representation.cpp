#include "bihom/errors.hpp"
#include "bihom/generator.hpp"
#include "builders.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bihom;
using namespace build;

namespace {

ActionPair adjoint_lie2() {
  const auto l = lie2();
  return {l.bracket, l.bracket};
}

}  // namespace

TEST_CASE("modules need commuting square twists") {
  CHECK_NOTHROW(BiHomModule(diag({1, 2}), diag({3, 4})));
  CHECK_THROWS_AS(BiHomModule(mat(2, 2, {0, 1, 0, 0}), diag({1, 2})), InputError);
  CHECK_THROWS_AS(BiHomModule(Matrix(2, 1), Matrix(2, 1)), InputError);
}

TEST_CASE("action evaluation") {
  const auto l = lie2();
  CHECK(oracle::zero(action_eval_left(ActionPair::trivial(2, 3), {1, 1}, {1, 2, 3})));
  ActionPair act = ActionPair::trivial(2, 2);
  act.left.set_value(0, 0, {1, 2});
  act.left.set_value(1, 0, {3, -1});
  CHECK(action_eval_left(act, {1, 0}, {1, 0}) == Vector{1, 2});
  CHECK(action_eval_left(act, {1, 1}, {1, 0}) == Vector{4, 1});
}

TEST_CASE("representation axioms") {
  const auto l = lie2();
  const auto v1 = BiHomModule::identity(1);
  CHECK(check_representation(l, v1, ActionPair::trivial(2, 1)).passed);

  const auto v2 = BiHomModule::identity(2);
  const ActionPair adj = adjoint_lie2();
  CHECK(check_representation(l, v2, adj).passed == oracle::representation({l, v2, adj}));
  CHECK(check_representation(l, v2, adj).passed);
  CHECK_FALSE(check_representation(l, v2, adj, SecondAxiomReading::kRightAction).passed);

  // lambda_r = +lambda_l with identity twists breaks the interchange axiom.
  ActionPair bad{adj.left, Bilinear(2, 2, 2)};
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t i = 0; i < 2; ++i) bad.right.set_value(p, i, adj.left.value(i, p));
  const auto r = check_representation(l, v2, bad);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.holds("rep-interchange"));
  CHECK_FALSE(oracle::representation({l, v2, bad}));

  CHECK_THROWS_AS(check_representation(l, v2, ActionPair::trivial(3, 2)), InputError);
}

TEST_CASE("1-cochains") {
  CHECK(cochain1_basis(abelian(2), BiHomModule::identity(3)).dim() == 6);
  const auto l0 = BiHomLieAlgebra::abelian("a", Matrix(1, 1), Matrix::identity(1));
  CHECK(cochain1_basis(l0, BiHomModule::identity(1)).dim() == 0);
  const auto l23 = BiHomLieAlgebra::abelian("a", diag({2}), diag({3}));
  CHECK(cochain1_basis(l23, BiHomModule(diag({2}), diag({3}))).dim() == 1);
  const BiHomModule v23(diag({2}), diag({3}));
  const SubspaceBasis c1 = cochain1_basis(l23, v23);
  for (const auto& c : c1.vectors()) CHECK(is_cochain1(l23, v23, cochain1_from_coordinates(c, 1, 1)));
}

TEST_CASE("2-cochains") {
  CHECK(cochain2_basis(abelian(2), BiHomModule::identity(1)).dim() == 1);
  const auto l0 = BiHomLieAlgebra::abelian("a", Matrix(2, 2), Matrix(2, 2));
  CHECK(cochain2_basis(l0, BiHomModule::identity(2)).dim() == 8);

  const auto l = BiHomLieAlgebra::abelian("a", Matrix::identity(2), diag({1, 0}));
  const auto v = BiHomModule::identity(1);
  const ActionPair act = ActionPair::trivial(2, 1);
  const auto rows = oracle::skew_rows({l, v, act});
  CHECK(cochain2_basis(l, v).dim() == 4 - oracle::rank(rows));

  const auto id = abelian(2);
  CHECK(is_cochain2(id, v, Bilinear(2, 2, 1)));
  CHECK(is_cochain2(id, v, theta12(1)));
  Bilinear diag_theta = theta12(1);
  diag_theta.set_value(0, 0, {1});
  CHECK_FALSE(is_cochain2(id, v, diag_theta));
}

TEST_CASE("generated instances are valid and the checks agree with the oracle") {
  InstanceGenerator gen(3);
  for (int trial = 0; trial < 300; ++trial) {
    const RandomInstance inst = gen.instance();
    INFO(inst.origin);
    CHECK(check_bihom_lie(inst.algebra).passed);
    CHECK(check_representation(inst.algebra, inst.module, inst.act).passed);
    CHECK(oracle::representation({inst.algebra, inst.module, inst.act}));

    ActionPair broken = inst.act;
    broken.left.at(0, 0, 0) += 1;
    CHECK(check_representation(inst.algebra, inst.module, broken).passed ==
          oracle::representation({inst.algebra, inst.module, broken}));
  }
}

TEST_CASE("basis changes preserve validity") {
  InstanceGenerator gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    RandomInstance inst = gen.instance();
    const std::size_t n = inst.algebra.dim();
    Matrix p = Matrix::identity(n);
    for (std::size_t r = 0; r + 1 < n; ++r) p(r, r + 1) = gen.entry();
    change_basis(inst.algebra, inst.act, p);
    CHECK(check_bihom_lie(inst.algebra).passed);
    CHECK(check_representation(inst.algebra, inst.module, inst.act).passed);
  }
}
