#include "bihom/errors.hpp"
#include "bihom/generator.hpp"
#include "builders.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bihom;
using namespace build;

namespace {

BiHomModule trivial1() { return BiHomModule::identity(1); }

void check_circle_against_oracle(const Bilinear& f, const Bilinear& g, const Matrix& a, const Matrix& b) {
  const Trilinear c = circle(f, g, a, b);
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) CHECK(c.value(i, j, k) == oracle::circle_value(f, g, a, b, i, j, k));
}

}  // namespace

TEST_CASE("circle product and bracket") {
  const auto l = lie2();
  const Matrix id = Matrix::identity(2);
  CHECK(circle(l.bracket, Bilinear(2, 2, 2), id, id).is_zero());
  CHECK(circle(Bilinear(2, 2, 2), l.bracket, id, id).is_zero());
  CHECK(circle(l.bracket, l.bracket, id, id).value(0, 0, 1) == Vector{0, 0});
  check_circle_against_oracle(l.bracket, l.bracket, id, id);
  CHECK(bracket2(l.bracket, Bilinear(2, 2, 2), id, id).is_zero());

  InstanceGenerator gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.entry(1, 3));
    const Bilinear f = gen.bilinear(n, n, n), g = gen.bilinear(n, n, n);
    const Matrix a = gen.matrix(n, n), b = gen.matrix(n, n);
    check_circle_against_oracle(f, g, a, b);
    CHECK(bracket2(f, g, a, b) == bracket2(g, f, a, b));
    CHECK(bracket2(f, f, a, b) == Rational(2) * circle(f, f, a, b));
  }
}

TEST_CASE("BiHom brackets are the square-zero elements") {
  CHECK(is_bihom_bracket(Bilinear(3, 3, 3), Matrix::identity(3), Matrix::identity(3)));
  CHECK(is_bihom_bracket(lie2().bracket, Matrix::identity(2), Matrix::identity(2)));
  CHECK(is_bihom_bracket(lie2().bracket, Matrix::identity(2), Matrix::identity(2)) ==
        check_bihom_jacobi(lie2()).passed);
  const auto bad = algebra(3, bracket(3, {{0, 1, {1, 0, 0}}, {1, 0, {-1, 0, 0}}, {1, 2, {0, 1, 0}}, {2, 1, {0, -1, 0}}}));
  CHECK_FALSE(is_bihom_bracket(bad.bracket, bad.alpha, bad.beta));

  InstanceGenerator gen(19);
  for (int trial = 0; trial < 100; ++trial) {
    BiHomLieAlgebra l = gen.algebra();
    if (trial % 2) l.bracket = gen.bilinear(l.dim(), l.dim(), l.dim());
    bool jacobi = true;
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = 0; j < l.dim(); ++j)
        for (std::size_t k = 0; k < l.dim(); ++k) jacobi = jacobi && oracle::zero(oracle::jacobi(l, i, j, k));
    CHECK(is_bihom_bracket(l.bracket, l.alpha, l.beta) == jacobi);
  }
}

TEST_CASE("d1") {
  const auto l = lie2();
  const auto v = trivial1();
  const ActionPair triv = ActionPair::trivial(2, 1);
  const Matrix f = mat(1, 2, {0, 1});
  const Bilinear d = d1(l, v, triv, f);
  CHECK(d.value(0, 1) == Vector{-1});
  CHECK(d.value(1, 0) == Vector{1});
  CHECK(d.value(0, 0) == Vector{0});

  // Abelian L: only the action terms survive.
  const auto a = abelian(2);
  const auto v2 = BiHomModule::identity(2);
  ActionPair act = ActionPair::trivial(2, 2);
  act.left.set_value(0, 1, {1, 0});
  act.right.set_value(1, 0, {-1, 0});
  const Matrix g = mat(2, 2, {1, 0, 0, 1});
  const Bilinear dg = d1(a, v2, act, g);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(dg.value(i, j) == action_eval_left(act, unit_vector(2, i), g.column(j)) +
                                  action_eval_right(act, g.column(i), unit_vector(2, j)));

  const auto l0 = BiHomLieAlgebra::abelian("a", Matrix(1, 1), Matrix::identity(1));
  CHECK_THROWS_AS(d1(l0, trivial1(), ActionPair::trivial(1, 1), mat(1, 1, {1})), PreconditionError);

  const Matrix dm = d1_matrix(l, v, triv);
  CHECK(dm.apply(Vector{0, 1}) == d.coordinates());
}

TEST_CASE("d2") {
  const auto l = lie2();
  const auto v = trivial1();
  const ActionPair triv = ActionPair::trivial(2, 1);
  CHECK(d2(l, v, triv, Bilinear(2, 2, 1)).is_zero());
  CHECK(d2(abelian(2), v, triv, theta12(5)).is_zero());
  const Trilinear t = d2(l, v, triv, theta12(1));
  CHECK(t.is_zero());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) CHECK(t.value(i, j, k) == oracle::d2_value({l, v, triv}, theta12(1), i, j, k));
  CHECK(is_cocycle(l, v, triv, theta12(1)));
}

TEST_CASE("d2 matches the oracle and the operator form on random instances") {
  InstanceGenerator gen(23);
  for (int trial = 0; trial < 60; ++trial) {
    const RandomInstance inst = gen.instance();
    const oracle::Setting s{inst.algebra, inst.module, inst.act};
    const Bilinear theta = gen.cochain2(inst.algebra, inst.module);
    const Trilinear t = d2(inst.algebra, inst.module, inst.act, theta);
    const std::size_t n = inst.algebra.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) CHECK(t.value(i, j, k) == oracle::d2_value(s, theta, i, j, k));
    CHECK(d2_forms_agree(inst.algebra, inst.module, inst.act, theta));
    CHECK(d2_matrix(inst.algebra, inst.module, inst.act).apply(theta.coordinates()) == t.coordinates());
  }
}

TEST_CASE("Z2, B2 and H2 on small examples") {
  const auto v = trivial1();
  const ActionPair triv = ActionPair::trivial(2, 1);
  CHECK(compute_z2(abelian(2), v, triv).dim() == 1);
  CHECK(compute_z2(lie2(), v, triv).dim() == 1);
  CHECK(compute_z2(abelian(1), v, ActionPair::trivial(1, 1)).dim() == 0);
  CHECK(compute_z2(algebra(1, Bilinear(1, 1, 1)), v, ActionPair::trivial(1, 1)).dim() == 0);

  CHECK(compute_b2(abelian(2), v, triv).dim() == 0);
  CHECK(compute_b2(lie2(), v, triv).dim() == 1);
  const auto l0 = lie2(Matrix(2, 2), Matrix::identity(2));
  CHECK(cochain1_basis(l0, v).empty());
  CHECK(compute_b2(l0, v, triv).dim() == 0);

  const auto h_ab = compute_h2(abelian(2), v, triv);
  CHECK(h_ab.z2.dim() == 1);
  CHECK(h_ab.b2.dim() == 0);
  CHECK(h_ab.h2_dim == 1);
  REQUIRE(h_ab.representatives.size() == 1);
  CHECK(is_cocycle(abelian(2), v, triv, h_ab.representatives[0]));

  const auto h_lie = compute_h2(lie2(), v, triv);
  CHECK(h_lie.z2.dim() == 1);
  CHECK(h_lie.b2.dim() == 1);
  CHECK(h_lie.h2_dim == 0);
  CHECK(h_lie.representatives.empty());

  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 2; ++m)
      CHECK(compute_h2(abelian(n), BiHomModule::identity(m), ActionPair::trivial(n, m)).h2_dim == m * n * (n - 1) / 2);
}

TEST_CASE("cohomology agrees with dense constraint assembly on random instances") {
  InstanceGenerator gen(29);
  for (int trial = 0; trial < 60; ++trial) {
    const RandomInstance inst = gen.instance();
    INFO(inst.origin);
    const auto h = compute_h2(inst.algebra, inst.module, inst.act);
    const auto dims = oracle::cohomology_dims({inst.algebra, inst.module, inst.act});
    CHECK(h.z2.dim() == dims.z2);
    CHECK(h.b2.dim() == dims.b2);
    CHECK(h.h2_dim == dims.h2);
    CHECK(h.representatives.size() == h.h2_dim);
    // B2 together with the representatives spans Z2.
    std::vector<Vector> all = h.b2.vectors();
    for (const auto& r : h.representatives) all.push_back(r.coordinates());
    CHECK(oracle::rank(all) == h.z2.dim());
    for (const auto& b : h.b2.vectors()) CHECK(in_span(h.z2, b));
  }
}

TEST_CASE("D2 o D1 = 0") {
  const auto l = lie2();
  CHECK(verify_d2_d1_zero(l, trivial1(), ActionPair::trivial(2, 1), Matrix(1, 2)));
  CHECK(verify_d2_d1_zero(l, trivial1(), ActionPair::trivial(2, 1), mat(1, 2, {3, -1})));
  InstanceGenerator gen(31);
  for (int trial = 0; trial < 100; ++trial) {
    const RandomInstance inst = gen.instance();
    CHECK(verify_d2_d1_zero(inst.algebra, inst.module, inst.act, gen.cochain1(inst.algebra, inst.module)));
  }
}

TEST_CASE("cohomologous cocycles") {
  const auto v = trivial1();
  const ActionPair triv = ActionPair::trivial(2, 1);
  const auto l = lie2();
  const auto same = cocycles_cohomologous(l, v, triv, theta12(1), theta12(1));
  REQUIRE(same);
  CHECK(d1(l, v, triv, *same).is_zero());
  CHECK_FALSE(cocycles_cohomologous(abelian(2), v, triv, theta12(1), Bilinear(2, 2, 1)).has_value());

  Bilinear not_skew(2, 2, 1);
  not_skew.set_value(0, 0, {1});
  CHECK_THROWS_AS(cocycles_cohomologous(l, v, triv, not_skew, not_skew), PreconditionError);

  InstanceGenerator gen(37);
  for (int trial = 0; trial < 50; ++trial) {
    const RandomInstance inst = gen.instance();
    const Bilinear theta = gen.cocycle(inst.algebra, inst.module, inst.act);
    const Matrix g = gen.cochain1(inst.algebra, inst.module);
    const Bilinear dg = d1(inst.algebra, inst.module, inst.act, g);
    const auto h = cocycles_cohomologous(inst.algebra, inst.module, inst.act, theta, theta + dg);
    REQUIRE(h);
    CHECK(d1(inst.algebra, inst.module, inst.act, *h) == dg);
  }
}
