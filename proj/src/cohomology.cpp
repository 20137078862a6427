#include "bihom/cohomology.hpp"

#include "bihom/errors.hpp"

namespace bihom {

namespace {

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> cs;
  for (std::size_t c = 0; c < m.cols(); ++c) cs.push_back(m.column(c));
  return cs;
}

void require_square_space(const Bilinear& f, const Matrix& alpha_m, const Matrix& beta_m) {
  const std::size_t n = alpha_m.rows();
  if (f.left_dim() != n || f.right_dim() != n || f.out_dim() != n || beta_m.rows() != n) {
    throw InputError("circle product: bilinear maps and twists must live on one space");
  }
}

// Bilinear map on L + V (dim n+m) carrying delta, lambda_l, lambda_r and theta.
Bilinear assemble_on_sum(const BiHomLieAlgebra& l, const ActionPair* act, const Bilinear* theta, std::size_t m,
                         bool with_delta) {
  const std::size_t n = l.dim(), big = n + m;
  Bilinear d(big, big, big);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (with_delta) d.at(i, j, k) = l.bracket.at(i, j, k);
  if (theta) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t p = 0; p < m; ++p) d.at(i, j, n + p) = theta->at(i, j, p);
  }
  if (act) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t q = 0; q < m; ++q)
        for (std::size_t p = 0; p < m; ++p) {
          d.at(i, n + q, n + p) = act->left.at(i, q, p);
          d.at(n + q, i, n + p) = act->right.at(q, i, p);
        }
  }
  return d;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

}  // namespace

Trilinear circle(const Bilinear& f, const Bilinear& g, const Matrix& alpha_m, const Matrix& beta_m) {
  require_square_space(f, alpha_m, beta_m);
  require_square_space(g, alpha_m, beta_m);
  const std::size_t n = alpha_m.rows();
  const auto a = columns(alpha_m), b = columns(beta_m), bb = columns(beta_m * beta_m);
  Trilinear out(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vector s = f.eval(bb[x], g.eval(b[y], a[z]));
        s += f.eval(bb[y], g.eval(b[z], a[x]));
        s += f.eval(bb[z], g.eval(b[x], a[y]));
        out.set_value(x, y, z, s);
      }
  return out;
}

Trilinear bracket2(const Bilinear& f, const Bilinear& g, const Matrix& alpha_m, const Matrix& beta_m) {
  return circle(f, g, alpha_m, beta_m) + circle(g, f, alpha_m, beta_m);
}

bool is_bihom_bracket(const Bilinear& f, const Matrix& alpha_m, const Matrix& beta_m) {
  return bracket2(f, f, alpha_m, beta_m).is_zero();
}

Matrix d1_matrix(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act) {
  require_action_shapes(l, v, act);
  const std::size_t n = l.dim(), m = v.dim();
  Matrix out(m * n * n, m * n);
  for (std::size_t col = 0; col < m * n; ++col) {
    const Matrix f = cochain1_from_coordinates(unit_vector(m * n, col), m, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector t = -f.apply(l.bracket.value(i, j));
        t += act.left.eval(unit_vector(n, i), f.column(j));
        t += act.right.eval(f.column(i), unit_vector(n, j));
        for (std::size_t p = 0; p < m; ++p) out((i * n + j) * m + p, col) = t[p];
      }
  }
  return out;
}

Bilinear d1(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act, const Matrix& f) {
  if (!is_cochain1(l, v, f)) throw PreconditionError("d1: the linear map does not intertwine the twists");
  const std::size_t n = l.dim(), m = v.dim();
  return Bilinear(n, n, m, d1_matrix(l, v, act).apply(f.entries()));
}

Trilinear d2(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act, const Bilinear& theta) {
  require_action_shapes(l, v, act);
  const std::size_t n = l.dim(), m = v.dim();
  if (theta.left_dim() != n || theta.right_dim() != n || theta.out_dim() != m) {
    throw InputError("d2: cochain shape does not match (L, V)");
  }
  const auto a = columns(l.alpha), b = columns(l.beta), bb = columns(l.beta * l.beta);
  // Brackets [beta y, alpha z] and theta(beta y, alpha z) on basis pairs.
  std::vector<Vector> inner_delta(n * n), inner_theta(n * n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      inner_delta[y * n + z] = bracket_eval(l, b[y], a[z]);
      inner_theta[y * n + z] = theta.eval(b[y], a[z]);
    }
  Trilinear out(n, m);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vector s = theta.eval(bb[x], inner_delta[y * n + z]);
        s += -theta.eval(bb[y], inner_delta[x * n + z]);
        s += theta.eval(bb[z], inner_delta[x * n + y]);
        s += act.left.eval(bb[x], inner_theta[y * n + z]);
        s += -act.left.eval(bb[y], inner_theta[x * n + z]);
        s += act.left.eval(bb[z], inner_theta[x * n + y]);
        out.set_value(x, y, z, s);
      }
  return out;
}

Matrix d2_matrix(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act) {
  const std::size_t n = l.dim(), m = v.dim();
  Matrix out(m * n * n * n, m * n * n);
  for (std::size_t col = 0; col < m * n * n; ++col) {
    const Trilinear t = d2(l, v, act, Bilinear(n, n, m, unit_vector(m * n * n, col)));
    const Vector& c = t.coordinates();
    for (std::size_t r = 0; r < c.size(); ++r) out(r, col) = c[r];
  }
  return out;
}

Trilinear d2_operator_form(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act,
                           const Bilinear& theta) {
  require_action_shapes(l, v, act);
  const std::size_t m = v.dim();
  const Bilinear d = assemble_on_sum(l, &act, nullptr, m, true);
  const Bilinear t = assemble_on_sum(l, nullptr, &theta, m, false);
  return bracket2(d, t, block_diagonal(l.alpha, v.alpha_v()), block_diagonal(l.beta, v.beta_v()));
}

bool d2_forms_agree(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act, const Bilinear& theta) {
  const std::size_t n = l.dim(), m = v.dim(), big = n + m;
  const Trilinear alternating = d2(l, v, act, theta);
  const Trilinear op = d2_operator_form(l, v, act, theta);
  for (std::size_t x = 0; x < big; ++x)
    for (std::size_t y = 0; y < big; ++y)
      for (std::size_t z = 0; z < big; ++z) {
        const Vector w = op.value(x, y, z);
        if (x < n && y < n && z < n) {
          for (std::size_t k = 0; k < n; ++k)
            if (w[k] != 0) return false;
          const Vector u = alternating.value(x, y, z);
          for (std::size_t p = 0; p < m; ++p)
            if (w[n + p] != u[p]) return false;
        } else if (!is_zero(w)) {
          return false;
        }
      }
  return true;
}

bool is_cocycle(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act, const Bilinear& theta) {
  return is_cochain2(l, v, theta) && d2(l, v, act, theta).is_zero();
}

SubspaceBasis compute_z2(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act) {
  const SubspaceBasis c2 = cochain2_basis(l, v);
  const Matrix inclusion = c2.as_columns();
  const SubspaceBasis coeffs = kernel_basis(d2_matrix(l, v, act) * inclusion);
  std::vector<Vector> z;
  for (const auto& c : coeffs.vectors()) z.push_back(inclusion.apply(c));
  return SubspaceBasis(c2.ambient_dim(), std::move(z));
}

SubspaceBasis compute_b2(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act) {
  const std::size_t n = l.dim(), m = v.dim();
  const SubspaceBasis c1 = cochain1_basis(l, v);
  if (c1.empty()) return SubspaceBasis(m * n * n);
  return image_basis(d1_matrix(l, v, act) * c1.as_columns());
}

CohomologyResult compute_h2(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act) {
  const std::size_t n = l.dim(), m = v.dim();
  CohomologyResult result{compute_z2(l, v, act), compute_b2(l, v, act), 0, {}};
  result.h2_dim = quotient_dim(result.z2, result.b2);

  // Extend the B2 basis to a Z2 basis; the Z2 pivot columns pick the representatives.
  std::vector<Vector> stacked = result.b2.vectors();
  stacked.insert(stacked.end(), result.z2.vectors().begin(), result.z2.vectors().end());
  const auto rr = rref(Matrix::from_columns(stacked, m * n * n));
  for (auto c : rr.pivot_columns) {
    if (c >= result.b2.dim()) result.representatives.push_back(cochain2_from_coordinates(stacked[c], n, m));
  }
  return result;
}

bool verify_d2_d1_zero(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act, const Matrix& f) {
  return d2(l, v, act, d1(l, v, act, f)).is_zero();
}

std::optional<Matrix> cocycles_cohomologous(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act,
                                            const Bilinear& theta, const Bilinear& theta_prime) {
  if (!is_cocycle(l, v, act, theta) || !is_cocycle(l, v, act, theta_prime)) {
    throw PreconditionError("cocycles_cohomologous: inputs must be 2-cocycles");
  }
  const std::size_t n = l.dim(), m = v.dim();
  const SubspaceBasis c1 = cochain1_basis(l, v);
  const Vector target = theta_prime.coordinates() - theta.coordinates();
  if (c1.empty()) {
    if (is_zero(target)) return Matrix(m, n);
    return std::nullopt;
  }
  const Matrix basis = c1.as_columns();
  const auto coeffs = solve(d1_matrix(l, v, act) * basis, target);
  if (!coeffs) return std::nullopt;
  return cochain1_from_coordinates(basis.apply(*coeffs), m, n);
}

}  // namespace bihom
