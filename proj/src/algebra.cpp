#include "bihom/algebra.hpp"

#include "bihom/errors.hpp"

namespace bihom {

BiHomLieAlgebra::BiHomLieAlgebra(std::string name_, Bilinear bracket_, Matrix alpha_, Matrix beta_)
    : name(std::move(name_)), bracket(std::move(bracket_)), alpha(std::move(alpha_)), beta(std::move(beta_)) {
  const std::size_t n = alpha.rows();
  if (alpha.cols() != n || beta.rows() != n || beta.cols() != n) {
    throw InputError("algebra '" + name + "': twist matrices must both be " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
  if (bracket.left_dim() != n || bracket.right_dim() != n || bracket.out_dim() != n) {
    throw InputError("algebra '" + name + "': bracket tensor shape does not match dimension " + std::to_string(n));
  }
}

BiHomLieAlgebra BiHomLieAlgebra::abelian(std::string name, Matrix alpha, Matrix beta) {
  const std::size_t n = alpha.rows();
  return BiHomLieAlgebra(std::move(name), Bilinear(n, n, n), std::move(alpha), std::move(beta));
}

void AxiomReport::add(Violation v) {
  passed = false;
  violations.push_back(std::move(v));
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& v : other.violations) add(v);
}

bool AxiomReport::holds(std::string_view axiom_prefix) const {
  for (const auto& v : violations) {
    if (std::string_view(v.axiom).starts_with(axiom_prefix)) return false;
  }
  return true;
}

bool AxiomReport::passed_ignoring(std::string_view axiom_prefix) const {
  for (const auto& v : violations) {
    if (!std::string_view(v.axiom).starts_with(axiom_prefix)) return false;
  }
  return true;
}

Vector bracket_eval(const BiHomLieAlgebra& l, const Vector& x, const Vector& y) { return l.bracket.eval(x, y); }

AxiomReport check_commuting(const BiHomLieAlgebra& l) {
  AxiomReport report;
  const Matrix ab = l.alpha * l.beta;
  const Matrix ba = l.beta * l.alpha;
  for (std::size_t j = 0; j < l.dim(); ++j) {
    Vector lhs = ab.column(j), rhs = ba.column(j);
    if (lhs != rhs) report.add({"commuting", {j}, std::move(lhs), std::move(rhs)});
  }
  return report;
}

AxiomReport check_skew(const BiHomLieAlgebra& l) {
  AxiomReport report;
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vector lhs = bracket_eval(l, l.beta.column(i), l.alpha.column(j));
      Vector rhs = -bracket_eval(l, l.beta.column(j), l.alpha.column(i));
      if (lhs != rhs) report.add({"skew", {i, j}, std::move(lhs), std::move(rhs)});
    }
  }
  return report;
}

AxiomReport check_bihom_jacobi(const BiHomLieAlgebra& l) {
  AxiomReport report;
  const std::size_t n = l.dim();
  const Matrix beta2 = l.beta * l.beta;
  std::vector<Vector> a(n), b(n), bb(n);
  for (std::size_t k = 0; k < n; ++k) {
    a[k] = l.alpha.column(k);
    b[k] = l.beta.column(k);
    bb[k] = beta2.column(k);
  }
  auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
    return bracket_eval(l, bb[x], bracket_eval(l, b[y], a[z]));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector sum = term(i, j, k) + term(j, k, i) + term(k, i, j);
        if (!is_zero(sum)) report.add({"bihom-jacobi", {i, j, k}, std::move(sum), zero_vector(n)});
      }
  return report;
}

AxiomReport check_multiplicative(const BiHomLieAlgebra& l) {
  AxiomReport report;
  const std::size_t n = l.dim();
  auto check_twist = [&](const Matrix& t, const char* name) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector lhs = t.apply(l.bracket.value(i, j));
        Vector rhs = bracket_eval(l, t.column(i), t.column(j));
        if (lhs != rhs) report.add({name, {i, j}, std::move(lhs), std::move(rhs)});
      }
  };
  check_twist(l.alpha, "multiplicative-alpha");
  check_twist(l.beta, "multiplicative-beta");
  return report;
}

AxiomReport check_bihom_lie(const BiHomLieAlgebra& l) {
  AxiomReport report = check_commuting(l);
  report.merge(check_skew(l));
  report.merge(check_bihom_jacobi(l));
  report.merge(check_multiplicative(l));
  return report;
}

bool is_bihom_lie(const BiHomLieAlgebra& l) {
  return check_commuting(l).passed && check_skew(l).passed && check_bihom_jacobi(l).passed;
}

AxiomReport is_morphism(const AlgebraMap& f) {
  const std::size_t n = f.source.dim();
  const std::size_t m = f.target.dim();
  if (f.matrix.rows() != m || f.matrix.cols() != n) {
    throw InputError("morphism matrix must be " + std::to_string(m) + "x" + std::to_string(n));
  }
  AxiomReport report;
  const Matrix fa = f.matrix * f.source.alpha, af = f.target.alpha * f.matrix;
  const Matrix fb = f.matrix * f.source.beta, bf = f.target.beta * f.matrix;
  for (std::size_t j = 0; j < n; ++j) {
    if (fa.column(j) != af.column(j)) report.add({"morphism-alpha", {j}, fa.column(j), af.column(j)});
    if (fb.column(j) != bf.column(j)) report.add({"morphism-beta", {j}, fb.column(j), bf.column(j)});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = f.matrix.apply(f.source.bracket.value(i, j));
      Vector rhs = bracket_eval(f.target, f.matrix.column(i), f.matrix.column(j));
      if (lhs != rhs) report.add({"morphism-bracket", {i, j}, std::move(lhs), std::move(rhs)});
    }
  return report;
}

namespace {

void require_ambient(const BiHomLieAlgebra& l, const SubspaceBasis& s) {
  if (s.ambient_dim() != l.dim()) throw InputError("subspace ambient dimension does not match the algebra");
}

bool twist_stable(const BiHomLieAlgebra& l, const SubspaceBasis& s) {
  for (const auto& v : s.vectors()) {
    if (!in_span(s, l.alpha.apply(v)) || !in_span(s, l.beta.apply(v))) return false;
  }
  return true;
}

}  // namespace

bool is_subalgebra(const BiHomLieAlgebra& l, const SubspaceBasis& h) {
  require_ambient(l, h);
  if (!twist_stable(l, h)) return false;
  for (const auto& x : h.vectors())
    for (const auto& y : h.vectors())
      if (!in_span(h, bracket_eval(l, x, y))) return false;
  return true;
}

bool is_ideal(const BiHomLieAlgebra& l, const SubspaceBasis& ideal) {
  require_ambient(l, ideal);
  if (!twist_stable(l, ideal)) return false;
  for (std::size_t k = 0; k < l.dim(); ++k) {
    const Vector e = unit_vector(l.dim(), k);
    for (const auto& v : ideal.vectors()) {
      if (!in_span(ideal, bracket_eval(l, e, v)) || !in_span(ideal, bracket_eval(l, v, e))) return false;
    }
  }
  return true;
}

}  // namespace bihom
