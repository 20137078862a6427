#include "bihom/generator.hpp"

#include <functional>
#include <vector>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

Bilinear antisymmetric(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& terms) {
  Bilinear b(n, n, n);
  for (const auto& [i, j, k, c] : terms) {
    b.at(i, j, k) += c;
    b.at(j, i, k) -= c;
  }
  return b;
}

Matrix from_column_lists(std::size_t n, const std::vector<Vector>& columns) { return Matrix::from_columns(columns, n); }

// rho(x) for the adjoint representation: column j of ad(e_i) is [e_i, e_j].
Matrix ad(const Bilinear& bracket, const Vector& x) {
  const std::size_t n = bracket.left_dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = bracket.eval(x, unit_vector(n, j));
    for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
  }
  return m;
}

}  // namespace

int InstanceGenerator::entry(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Matrix InstanceGenerator::matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry();
  return m;
}

Bilinear InstanceGenerator::bilinear(std::size_t left, std::size_t right, std::size_t out) {
  Vector coords(left * right * out);
  for (auto& x : coords) x = entry();
  return Bilinear(left, right, out, std::move(coords));
}

Vector InstanceGenerator::combination(const SubspaceBasis& basis) {
  Vector v = zero_vector(basis.ambient_dim());
  for (const auto& b : basis.vectors()) v += Rational(entry()) * b;
  return v;
}

Matrix InstanceGenerator::cochain1(const BiHomLieAlgebra& l, const BiHomModule& v) {
  return cochain1_from_coordinates(combination(cochain1_basis(l, v)), v.dim(), l.dim());
}

Bilinear InstanceGenerator::cochain2(const BiHomLieAlgebra& l, const BiHomModule& v) {
  return cochain2_from_coordinates(combination(cochain2_basis(l, v)), l.dim(), v.dim());
}

Bilinear InstanceGenerator::cocycle(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act) {
  return cochain2_from_coordinates(combination(compute_z2(l, v, act)), l.dim(), v.dim());
}

RandomInstance InstanceGenerator::instance(std::size_t max_n, std::size_t max_m) {
  if (max_n == 0 || max_m == 0) throw InputError("generator needs max_n, max_m >= 1");
  enum Kind { kAbelian, kR2, kR2A1, kH3, kR3, kSl2, kSo3 };
  std::vector<Kind> kinds{kAbelian};
  if (max_n >= 2) kinds.push_back(kR2);
  if (max_n >= 3) kinds.insert(kinds.end(), {kR2A1, kH3, kR3, kSl2, kSo3});
  const Kind kind = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng_)];

  std::size_t n = 0;
  Bilinear g;
  Matrix alpha, beta;
  std::string name;
  auto pick_power = [&](const Matrix& a) { return power(a, std::vector<unsigned>{0, 2, 3}[entry(0, 2)]); };
  const Rational one(1);

  switch (kind) {
    case kAbelian: {
      n = static_cast<std::size_t>(entry(1, static_cast<int>(max_n)));
      name = "abelian" + std::to_string(n);
      g = Bilinear(n, n, n);
      alpha = matrix(n, n);
      beta = Rational(entry()) * Matrix::identity(n) + Rational(entry()) * alpha + Rational(entry(-1, 1)) * (alpha * alpha);
      break;
    }
    case kR2: {
      n = 2;
      name = "r2";
      g = antisymmetric(2, {{0, 1, 1, one}});
      alpha = from_column_lists(2, {{1, entry()}, {0, entry()}});
      beta = pick_power(alpha);
      break;
    }
    case kR2A1: {
      n = 3;
      name = "r2+a1";
      g = antisymmetric(3, {{0, 1, 1, one}});
      alpha = from_column_lists(3, {{1, entry(), entry()}, {0, entry(), 0}, {0, 0, entry()}});
      beta = pick_power(alpha);
      break;
    }
    case kH3: {
      n = 3;
      name = "heisenberg";
      g = antisymmetric(3, {{0, 1, 2, one}});
      const int a = entry(), b = entry(), c = entry(), d = entry();
      alpha = from_column_lists(3, {{a, c, entry()}, {b, d, entry()}, {0, 0, a * d - b * c}});
      beta = pick_power(alpha);
      break;
    }
    case kR3: {
      n = 3;
      const Rational lambda = entry(0, 1) == 0 ? Rational(-1) : Rational(2);
      name = "r3(" + to_string(lambda) + ")";
      g = antisymmetric(3, {{0, 1, 1, one}, {0, 2, 2, lambda}});
      alpha = from_column_lists(3, {{1, entry(), entry()}, {0, entry(), 0}, {0, 0, entry()}});
      beta = pick_power(alpha);
      break;
    }
    case kSl2: {
      n = 3;
      name = "sl2";
      g = antisymmetric(3, {{0, 1, 1, Rational(2)}, {0, 2, 2, Rational(-2)}, {1, 2, 0, one}});
      const std::vector<Rational> scales{1, -1, 2, -2};
      const Rational t = scales[entry(0, 3)], u = scales[entry(0, 3)];
      alpha = Matrix::diagonal({1, t, 1 / t});
      beta = Matrix::diagonal({1, u, 1 / u});
      break;
    }
    case kSo3: {
      n = 3;
      name = "so3";
      g = antisymmetric(3, {{0, 1, 2, one}, {1, 2, 0, one}, {2, 0, 1, one}});
      // Quarter turn about the third axis, conjugated to a random axis by cycling the basis.
      Matrix turn = from_column_lists(3, {{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}});
      const Matrix cycle = from_column_lists(3, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
      for (int k = entry(0, 2); k > 0; --k) turn = cycle * turn * cycle.transpose();
      alpha = power(turn, static_cast<unsigned>(entry(1, 3)));
      beta = pick_power(turn);
      break;
    }
  }

  // Twisted algebra: [e_i, e_j]' = [alpha e_i, beta e_j].
  Bilinear twisted(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) twisted.set_value(i, j, g.eval(alpha.column(i), beta.column(j)));

  // A g-module (rho, alpha_V, beta_V) with alpha_V rho(x) = rho(alpha x) alpha_V and likewise for beta.
  std::function<Matrix(const Vector&)> rho;
  Matrix alpha_v, beta_v;
  std::string rep_name;
  std::vector<int> choices{0};
  if (n <= max_m && kind != kAbelian) choices.insert(choices.end(), {1, 2});
  if (kind == kR2) choices.push_back(3);
  if (kind == kSl2 && max_m >= 2) choices.push_back(4);
  switch (choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng_)]) {
    case 0: {
      const std::size_t m = static_cast<std::size_t>(entry(1, static_cast<int>(max_m)));
      rep_name = "trivial" + std::to_string(m);
      if (kind == kAbelian) {
        // rho(x) = (w . x) B with twists polynomial in B; kept only if the twists intertwine.
        const Matrix base = matrix(m, m);
        Vector weights(n);
        for (auto& w : weights) w = entry();
        rho = [base, weights, m](const Vector& x) {
          Rational s = 0;
          for (std::size_t k = 0; k < x.size(); ++k) s += weights[k] * x[k];
          return s * base;
        };
        alpha_v = Rational(entry()) * Matrix::identity(m) + Rational(entry()) * base;
        beta_v = Rational(entry()) * Matrix::identity(m) + Rational(entry()) * base;
        bool compatible = true;
        for (std::size_t k = 0; k < n && compatible; ++k) {
          const Vector e = unit_vector(n, k);
          compatible = alpha_v * rho(e) == rho(alpha.apply(e)) * alpha_v && beta_v * rho(e) == rho(beta.apply(e)) * beta_v;
        }
        if (compatible) {
          rep_name = "abelian-action" + std::to_string(m);
          break;
        }
      }
      rho = [m](const Vector&) { return Matrix(m, m); };
      alpha_v = matrix(m, m);
      beta_v = Rational(entry()) * Matrix::identity(m) + Rational(entry()) * alpha_v;
      break;
    }
    case 1:
      rep_name = "adjoint";
      rho = [g](const Vector& x) { return ad(g, x); };
      alpha_v = alpha;
      beta_v = beta;
      break;
    case 2:
      rep_name = "adjoint-zero-alpha";
      rho = [g](const Vector& x) { return ad(g, x); };
      alpha_v = Matrix(n, n);
      beta_v = beta;
      break;
    case 3: {
      // Character of r2: rho(e0) = c, rho(e1) = 0; chi(alpha x) = chi(x) for this family.
      const Rational c = entry();
      rep_name = "character(" + to_string(c) + ")";
      rho = [c](const Vector& x) { return Matrix(1, 1, {c * x[0]}); };
      alpha_v = Matrix(1, 1, {entry()});
      beta_v = Matrix(1, 1, {entry()});
      break;
    }
    case 4: {
      rep_name = "sl2-standard";
      rho = [](const Vector& x) { return Matrix(2, 2, {x[0], x[1], x[2], -x[0]}); };
      alpha_v = Matrix::diagonal({alpha(1, 1), 1});
      beta_v = Matrix::diagonal({beta(1, 1), 1});
      break;
    }
  }

  const std::size_t m = alpha_v.rows();
  ActionPair act = ActionPair::trivial(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix left = rho(alpha.column(i)) * beta_v;
    const Matrix right = Rational(-1) * (rho(beta.column(i)) * alpha_v);
    for (std::size_t q = 0; q < m; ++q) {
      act.left.set_value(i, q, left.column(q));
      act.right.set_value(q, i, right.column(q));
    }
  }
  return {BiHomLieAlgebra(name, std::move(twisted), std::move(alpha), std::move(beta)),
          BiHomModule(std::move(alpha_v), std::move(beta_v)), std::move(act), name + "/" + rep_name};
}

void change_basis(BiHomLieAlgebra& l, ActionPair& act, const Matrix& p) {
  const std::size_t n = l.dim();
  const auto p_inv = inverse(p);
  if (!p_inv || p.rows() != n) throw InputError("change_basis needs an invertible n x n matrix");
  Bilinear bracket(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bracket.set_value(i, j, p_inv->apply(l.bracket.eval(p.column(i), p.column(j))));
  const std::size_t m = act.left.out_dim();
  ActionPair moved = ActionPair::trivial(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < m; ++q) {
      moved.left.set_value(i, q, act.left.eval(p.column(i), unit_vector(m, q)));
      moved.right.set_value(q, i, act.right.eval(unit_vector(m, q), p.column(i)));
    }
  l = BiHomLieAlgebra(l.name, std::move(bracket), *p_inv * l.alpha * p, *p_inv * l.beta * p);
  act = std::move(moved);
}

}  // namespace bihom
