#include "bihom/errors.hpp"
#include "bihom/generator.hpp"
#include "builders.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bihom;
using namespace build;

namespace {

SplitExtensionData data_of(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act, const Bilinear& theta) {
  return {l, v, act, theta, Bilinear(v.dim(), v.dim(), v.dim())};
}

SplitExtensionData trivial_data(const BiHomLieAlgebra& l, std::size_t m, Bilinear theta) {
  return data_of(l, BiHomModule::identity(m), ActionPair::trivial(l.dim(), m), std::move(theta));
}

/// The same extension with M written in the basis given by the columns of p.
ShortExactSequence rebased(const ShortExactSequence& e, const Matrix& p) {
  ShortExactSequence out = e;
  const Matrix p_inv = *inverse(p);
  const std::size_t n = e.m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.m.bracket.set_value(i, j, p_inv.apply(e.m.bracket.eval(p.column(i), p.column(j))));
  out.m.alpha = p_inv * e.m.alpha * p;
  out.m.beta = p_inv * e.m.beta * p;
  out.i = p_inv * e.i;
  out.pi = e.pi * p;
  return out;
}

Matrix graph_section(std::size_t n, std::size_t m) {
  Matrix s(n + m, n);
  for (std::size_t k = 0; k < n; ++k) s(k, k) = 1;
  return s;
}

}  // namespace

TEST_CASE("exactness") {
  const auto e = semidirect_sum(trivial_data(lie2(), 1, Bilinear(2, 2, 1))).sequence;
  CHECK(check_exact(e).passed);
  ShortExactSequence no_inj = e;
  no_inj.i = Matrix(3, 1);
  CHECK_FALSE(check_exact(no_inj).holds("injective"));
  ShortExactSequence no_surj = e;
  no_surj.pi(1, 1) = 0;
  CHECK_FALSE(check_exact(no_surj).holds("surjective"));
  ShortExactSequence bad_pi = e;
  bad_pi.pi = mat(2, 3, {0, 1, 0, 1, 0, 0});
  CHECK_FALSE(check_exact(bad_pi).passed);
}

TEST_CASE("semidirect sums") {
  const auto direct = semidirect_sum(trivial_data(abelian(2), 1, Bilinear(2, 2, 1)));
  CHECK(check_bihom_lie(direct.algebra).passed);
  CHECK(direct.algebra.dim() == 3);

  const auto central = semidirect_sum(trivial_data(lie2(), 1, theta12(1)));
  CHECK(central.algebra.dim() == 3);
  CHECK(central.algebra.bracket.value(0, 1) == Vector{0, 1, 1});
  CHECK(check_bihom_lie(central.algebra).passed);
  CHECK(oracle::bihom_lie(central.algebra));

  Bilinear not_skew(2, 2, 1);
  not_skew.set_value(0, 0, {1});
  const auto broken = semidirect_sum(trivial_data(abelian(2), 1, not_skew));
  CHECK_FALSE(check_bihom_lie(broken.algebra).holds("skew"));
}

TEST_CASE("classification flags") {
  const auto direct = semidirect_sum(trivial_data(abelian(2), 1, Bilinear(2, 2, 1))).sequence;
  const auto f = classify(direct);
  CHECK(f.trivial == Decision::kYes);
  CHECK(f.split == Decision::kYes);
  CHECK(f.central);
  CHECK(f.abelian);

  const auto l = lie2();
  const ActionPair adj{l.bracket, l.bracket};
  const auto acting = semidirect_sum(data_of(l, BiHomModule::identity(2), adj, Bilinear(2, 2, 2))).sequence;
  const auto g = classify(acting);
  CHECK(g.split == Decision::kYes);
  CHECK(g.abelian);
  CHECK_FALSE(g.central);

  const auto heisenberg = semidirect_sum(trivial_data(abelian(2), 1, theta12(1))).sequence;
  const auto h = classify(heisenberg);
  CHECK(h.abelian);
  CHECK(h.central);
  CHECK(h.split == Decision::kNo);
  CHECK(h.trivial == Decision::kNo);

  ShortExactSequence not_exact = heisenberg;
  not_exact.i = Matrix(3, 1);
  CHECK_THROWS_AS(classify(not_exact), PreconditionError);
}

TEST_CASE("section search") {
  const auto direct = semidirect_sum(trivial_data(abelian(2), 1, Bilinear(2, 2, 1))).sequence;
  const auto found = find_section(direct);
  REQUIRE(found.status == Decision::kYes);
  CHECK(direct.pi * found.section->matrix == Matrix::identity(2));
  CHECK(is_subalgebra(direct.m, SubspaceBasis::span_of(3, {found.section->matrix.column(0), found.section->matrix.column(1)})));

  const auto canonical = semidirect_sum(trivial_data(lie2(), 1, Bilinear(2, 2, 1))).sequence;
  const auto graph = find_section(canonical);
  REQUIRE(graph.status == Decision::kYes);
  CHECK(graph.section->matrix == graph_section(2, 1));

  const auto heisenberg = semidirect_sum(trivial_data(abelian(2), 1, theta12(1))).sequence;
  CHECK(find_section(heisenberg).status == Decision::kNo);
}

TEST_CASE("decomposition") {
  const auto data = trivial_data(lie2(), 1, theta12(1));
  const auto sum = semidirect_sum(data);
  CHECK(decompose_split_extension(sum.sequence, {graph_section(2, 1)}) == data);

  // Direct sum in a permuted basis of M.
  const auto direct_data = trivial_data(lie2(), 1, Bilinear(2, 2, 1));
  const auto direct = semidirect_sum(direct_data).sequence;
  const Matrix p = mat(3, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
  const auto permuted = rebased(direct, p);
  CHECK(check_exact(permuted).passed);
  const Matrix s = *inverse(p) * graph_section(2, 1);
  const auto recovered = decompose_split_extension(permuted, {s});
  CHECK(recovered.theta.is_zero());
  CHECK(recovered.act == ActionPair::trivial(2, 1));
  CHECK(recovered.l.bracket == lie2().bracket);

  CHECK_THROWS_AS(decompose_split_extension(sum.sequence, {Matrix(3, 2)}), PreconditionError);
}

TEST_CASE("decompose inverts semidirect_sum on random data") {
  InstanceGenerator gen(41);
  for (int trial = 0; trial < 50; ++trial) {
    const RandomInstance inst = gen.instance();
    const auto data = data_of(inst.algebra, inst.module, inst.act, gen.cocycle(inst.algebra, inst.module, inst.act));
    const auto sum = semidirect_sum(data);
    CHECK(decompose_split_extension(sum.sequence, {graph_section(inst.algebra.dim(), inst.module.dim())}) == data);
  }
}

TEST_CASE("equivalences") {
  const auto e = semidirect_sum(trivial_data(lie2(), 1, Bilinear(2, 2, 1))).sequence;
  CHECK(check_equivalence(e, e, Matrix::identity(3), Matrix::identity(1), Matrix::identity(2)).passed);
  CHECK_FALSE(check_equivalence(e, e, Matrix(3, 3), Matrix::identity(1), Matrix::identity(2)).holds("bijective"));

  const auto l = lie2();
  const auto v = BiHomModule::identity(1);
  const ActionPair triv = ActionPair::trivial(2, 1);
  const auto same = extensions_from_cohomologous_cocycles(l, v, triv, theta12(1), theta12(1), Matrix(1, 2));
  CHECK(same.phi == Matrix::identity(3));

  const Matrix h = mat(1, 2, {0, 1});
  const Bilinear shifted = d1(l, v, triv, h);
  CHECK(shifted == theta12(-1));
  const auto pair = extensions_from_cohomologous_cocycles(l, v, triv, Bilinear(2, 2, 1), shifted, h);
  CHECK(pair.phi == mat(3, 3, {1, 0, 0, 0, 1, 0, 0, -1, 1}));
  CHECK(check_equivalence(pair.first, pair.second, pair.phi, Matrix::identity(1), Matrix::identity(2)).passed);
  CHECK_THROWS_AS(extensions_from_cohomologous_cocycles(l, v, triv, Bilinear(2, 2, 1), theta12(1), Matrix(1, 2)),
                  PreconditionError);
}

TEST_CASE("extension classes") {
  const auto direct = semidirect_sum(trivial_data(lie2(), 1, Bilinear(2, 2, 1))).sequence;
  CHECK(ext_class(direct).data.theta.is_zero());

  // Two intertwining sections give cohomologous cocycles.
  InstanceGenerator gen(43);
  for (int trial = 0; trial < 20; ++trial) {
    const RandomInstance inst = gen.instance();
    const auto data = data_of(inst.algebra, inst.module, inst.act, gen.cocycle(inst.algebra, inst.module, inst.act));
    const auto e = semidirect_sum(data).sequence;
    const auto family = intertwining_sections(e);
    REQUIRE(family);
    std::vector<Rational> coeffs(family->directions.size());
    for (auto& c : coeffs) c = gen.entry();
    const auto c1 = ext_class(e, Section{family->particular});
    const auto c2 = ext_class(e, Section{family->at(coeffs)});
    CHECK(cocycles_cohomologous(inst.algebra, inst.module, inst.act, c1.data.theta, c2.data.theta).has_value());
  }

  const auto zero = semidirect_sum(trivial_data(abelian(2), 1, Bilinear(2, 2, 1))).sequence;
  const auto heis = semidirect_sum(trivial_data(abelian(2), 1, theta12(1))).sequence;
  const auto cmp = compare_extensions(zero, heis);
  CHECK_FALSE(cmp.equivalent);
  CHECK(compare_extensions(heis, heis).equivalent);
}

TEST_CASE("compare_extensions finds the witnessing map") {
  InstanceGenerator gen(47);
  for (int trial = 0; trial < 30; ++trial) {
    const RandomInstance inst = gen.instance();
    const Bilinear theta = gen.cocycle(inst.algebra, inst.module, inst.act);
    const Matrix h = gen.cochain1(inst.algebra, inst.module);
    const Bilinear theta2 = theta + d1(inst.algebra, inst.module, inst.act, h);
    const auto e1 = semidirect_sum(data_of(inst.algebra, inst.module, inst.act, theta)).sequence;
    const auto e2 = semidirect_sum(data_of(inst.algebra, inst.module, inst.act, theta2)).sequence;
    const auto c = compare_extensions(e1, e2);
    REQUIRE(c.equivalent);
    const std::size_t n = inst.algebra.dim(), m = inst.module.dim();
    CHECK(check_equivalence(e1, e2, *c.phi, Matrix::identity(m), Matrix::identity(n)).passed);
  }
}
