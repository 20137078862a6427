#include "bihom/representation.hpp"

#include "bihom/errors.hpp"

namespace bihom {

BiHomModule::BiHomModule(Matrix alpha_v, Matrix beta_v) : alpha_v_(std::move(alpha_v)), beta_v_(std::move(beta_v)) {
  const std::size_t m = alpha_v_.rows();
  if (alpha_v_.cols() != m || beta_v_.rows() != m || beta_v_.cols() != m) {
    throw InputError("module twists must both be " + std::to_string(m) + "x" + std::to_string(m));
  }
  if (alpha_v_ * beta_v_ != beta_v_ * alpha_v_) throw InputError("module twists alpha_v and beta_v do not commute");
}

BiHomModule BiHomModule::identity(std::size_t m) { return BiHomModule(Matrix::identity(m), Matrix::identity(m)); }

ActionPair ActionPair::trivial(std::size_t n, std::size_t m) { return {Bilinear(n, m, m), Bilinear(m, n, m)}; }

Vector action_eval_left(const ActionPair& act, const Vector& x, const Vector& v) { return act.left.eval(x, v); }
Vector action_eval_right(const ActionPair& act, const Vector& v, const Vector& x) { return act.right.eval(v, x); }

void require_action_shapes(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act) {
  const std::size_t n = l.dim(), m = v.dim();
  if (act.left.left_dim() != n || act.left.right_dim() != m || act.left.out_dim() != m) {
    throw InputError("lambda_l must have shape " + std::to_string(n) + "x" + std::to_string(m) + "->" +
                     std::to_string(m));
  }
  if (act.right.left_dim() != m || act.right.right_dim() != n || act.right.out_dim() != m) {
    throw InputError("lambda_r must have shape " + std::to_string(m) + "x" + std::to_string(n) + "->" +
                     std::to_string(m));
  }
}

AxiomReport check_representation(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act,
                                 SecondAxiomReading reading) {
  require_action_shapes(l, v, act);
  const std::size_t n = l.dim(), m = v.dim();
  const Matrix beta2 = l.beta * l.beta;
  const Matrix beta_v2 = v.beta_v() * v.beta_v();
  AxiomReport report;

  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t p = 0; p < m; ++p) {
      Vector lhs = act.right.eval(v.beta_v().column(p), l.alpha.column(y));
      Vector rhs = -act.left.eval(l.beta.column(y), v.alpha_v().column(p));
      if (lhs != rhs) report.add({"rep-interchange", {y, p}, std::move(lhs), std::move(rhs)});
    }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t p = 0; p < m; ++p) {
        const Vector bx = l.beta.column(x), by = l.beta.column(y);
        const Vector ax = l.alpha.column(x), ay = l.alpha.column(y);
        Vector lhs = act.right.eval(beta_v2.column(p), bracket_eval(l, bx, ay));
        Vector rhs = act.left.eval(beta2.column(x), act.right.eval(v.beta_v().column(p), ay));
        const Vector inner = reading == SecondAxiomReading::kLeftAction
                                 ? act.left.eval(bx, v.alpha_v().column(p))
                                 : act.right.eval(v.beta_v().column(p), ax);
        rhs += act.left.eval(beta2.column(y), inner);
        if (lhs != rhs) report.add({"rep-compatibility", {x, y, p}, std::move(lhs), std::move(rhs)});
      }
  return report;
}

SubspaceBasis cochain1_basis(const BiHomLieAlgebra& l, const BiHomModule& v) {
  const std::size_t n = l.dim(), m = v.dim();
  // Unknown F[p][i] at index p*n + i; one row per entry of F*T - T_V*F.
  Matrix system(2 * m * n, m * n);
  auto add_block = [&](std::size_t offset, const Matrix& t, const Matrix& tv) {
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = offset + p * n + j;
        for (std::size_t i = 0; i < n; ++i) system(row, p * n + i) += t(i, j);
        for (std::size_t q = 0; q < m; ++q) system(row, q * n + j) -= tv(p, q);
      }
  };
  add_block(0, l.alpha, v.alpha_v());
  add_block(m * n, l.beta, v.beta_v());
  return kernel_basis(system);
}

bool is_cochain1(const BiHomLieAlgebra& l, const BiHomModule& v, const Matrix& f) {
  if (f.rows() != v.dim() || f.cols() != l.dim()) throw InputError("1-cochain must be a (dim V) x (dim L) matrix");
  return f * l.alpha == v.alpha_v() * f && f * l.beta == v.beta_v() * f;
}

Matrix cochain1_from_coordinates(const Vector& coords, std::size_t m, std::size_t n) {
  return Matrix(m, n, coords);
}

SubspaceBasis cochain2_basis(const BiHomLieAlgebra& l, const BiHomModule& v) {
  const std::size_t n = l.dim(), m = v.dim();
  Matrix system(n * (n + 1) / 2 * m, n * n * m);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t p = 0; p < m; ++p, ++row)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const Rational c = l.beta(a, i) * l.alpha(b, j) + l.beta(a, j) * l.alpha(b, i);
            if (c != 0) system(row, (a * n + b) * m + p) += c;
          }
  return kernel_basis(system);
}

bool is_cochain2(const BiHomLieAlgebra& l, const BiHomModule& v, const Bilinear& theta) {
  const std::size_t n = l.dim();
  if (theta.left_dim() != n || theta.right_dim() != n || theta.out_dim() != v.dim()) {
    throw InputError("2-cochain must have shape " + std::to_string(n) + "x" + std::to_string(n) + "->" +
                     std::to_string(v.dim()));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector s = theta.eval(l.beta.column(i), l.alpha.column(j)) + theta.eval(l.beta.column(j), l.alpha.column(i));
      if (!is_zero(s)) return false;
    }
  return true;
}

Bilinear cochain2_from_coordinates(const Vector& coords, std::size_t n, std::size_t m) {
  return Bilinear(n, n, m, coords);
}

}  // namespace bihom
