#include "bihom/extension.hpp"

#include "bihom/errors.hpp"

namespace bihom {

std::string to_string(Decision d) {
  switch (d) {
    case Decision::kYes: return "yes";
    case Decision::kNo: return "no";
    case Decision::kUndecided: return "undecided";
  }
  return "undecided";
}

namespace {

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

// [left | right] side by side.
Matrix hstack(const Matrix& left, const Matrix& right) {
  Matrix m(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) m(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) m(r, left.cols() + c) = right(r, c);
  }
  return m;
}

void require_sequence_shapes(const ShortExactSequence& e) {
  if (e.i.rows() != e.m.dim() || e.i.cols() != e.v.dim()) {
    throw InputError("inclusion matrix must be " + std::to_string(e.m.dim()) + "x" + std::to_string(e.v.dim()));
  }
  if (e.pi.rows() != e.l.dim() || e.pi.cols() != e.m.dim()) {
    throw InputError("projection matrix must be " + std::to_string(e.l.dim()) + "x" + std::to_string(e.m.dim()));
  }
}

// Residuals of the closure conditions as polynomials of degree <= 2 in the
// family coefficients r: constant + sum_j r_j linear[j] + sum_{j,k} r_j r_k quadratic[j][k].
struct QuadraticSystem {
  Vector constant;
  std::vector<Vector> linear;
  std::vector<std::vector<Vector>> quadratic;

  void append(const Vector& c, const std::vector<Vector>& lin, const std::vector<std::vector<Vector>>& quad) {
    constant.insert(constant.end(), c.begin(), c.end());
    for (std::size_t j = 0; j < lin.size(); ++j) {
      linear[j].insert(linear[j].end(), lin[j].begin(), lin[j].end());
      for (std::size_t k = 0; k < lin.size(); ++k)
        quadratic[j][k].insert(quadratic[j][k].end(), quad[j][k].begin(), quad[j][k].end());
    }
  }

  bool has_quadratic_terms() const {
    for (const auto& row : quadratic)
      for (const auto& q : row)
        if (!is_zero(q)) return true;
    return false;
  }

  Vector residual(const std::vector<Rational>& r) const {
    Vector out = constant;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] == 0) continue;
      out += r[j] * linear[j];
      for (std::size_t k = 0; k < r.size(); ++k)
        if (r[k] != 0) out += (r[j] * r[k]) * quadratic[j][k];
    }
    return out;
  }
};

QuadraticSystem closure_system(const ShortExactSequence& e, const SectionFamily& family, Complement complement) {
  const std::size_t nl = e.l.dim(), nv = e.v.dim();
  const std::size_t k = family.directions.size();
  const Bilinear& d = e.m.bracket;
  QuadraticSystem sys{{}, std::vector<Vector>(k), std::vector<std::vector<Vector>>(k, std::vector<Vector>(k))};

  std::vector<Vector> c(nl);
  std::vector<std::vector<Vector>> u(nl, std::vector<Vector>(k));
  for (std::size_t a = 0; a < nl; ++a) {
    c[a] = family.particular.column(a);
    for (std::size_t j = 0; j < k; ++j) u[a][j] = family.directions[j].column(a);
  }

  // d'(s_a, s_b) - s(delta(e_a, e_b)) = 0
  for (std::size_t a = 0; a < nl; ++a)
    for (std::size_t b = 0; b < nl; ++b) {
      const Vector delta = e.l.bracket.value(a, b);
      Vector con = d.eval(c[a], c[b]) - family.particular.apply(delta);
      std::vector<Vector> lin(k);
      std::vector<std::vector<Vector>> quad(k, std::vector<Vector>(k));
      for (std::size_t j = 0; j < k; ++j) {
        lin[j] = d.eval(u[a][j], c[b]) + d.eval(c[a], u[b][j]) - family.directions[j].apply(delta);
        for (std::size_t l = 0; l < k; ++l) quad[j][l] = d.eval(u[a][j], u[b][l]);
      }
      sys.append(con, lin, quad);
    }

  if (complement == Complement::kIdeal) {
    // d'(s_a, i_q) = 0 = d'(i_q, s_a): these lie in i(V) and in s(L).
    for (std::size_t a = 0; a < nl; ++a)
      for (std::size_t q = 0; q < nv; ++q) {
        const Vector iq = e.i.column(q);
        for (int side = 0; side < 2; ++side) {
          auto eval = [&](const Vector& x) { return side == 0 ? d.eval(x, iq) : d.eval(iq, x); };
          Vector con = eval(c[a]);
          std::vector<Vector> lin(k);
          std::vector<std::vector<Vector>> quad(k, std::vector<Vector>(k, zero_vector(con.size())));
          for (std::size_t j = 0; j < k; ++j) lin[j] = eval(u[a][j]);
          sys.append(con, lin, quad);
        }
      }
  }
  return sys;
}

bool next_coefficients(std::vector<Rational>& r, int lo, int hi) {
  for (auto& x : r) {
    if (x < hi) {
      x += 1;
      return true;
    }
    x = lo;
  }
  return false;
}

}  // namespace

AxiomReport check_exact(const ShortExactSequence& e) {
  require_sequence_shapes(e);
  AxiomReport report;
  for (auto v : is_morphism(e.inclusion()).violations) {
    v.axiom = "i-" + v.axiom;
    report.add(std::move(v));
  }
  for (auto v : is_morphism(e.projection()).violations) {
    v.axiom = "pi-" + v.axiom;
    report.add(std::move(v));
  }
  const SubspaceBasis ker_i = kernel_basis(e.i);
  if (!ker_i.empty()) report.add({"injective", {}, ker_i.vectors().front(), zero_vector(e.v.dim())});
  const std::size_t rank_pi = rank(e.pi);
  if (rank_pi != e.l.dim()) {
    report.add({"surjective", {}, Vector{Rational(static_cast<long>(rank_pi))},
                Vector{Rational(static_cast<long>(e.l.dim()))}});
  }
  const SubspaceBasis image_i = image_basis(e.i);
  const SubspaceBasis ker_pi = kernel_basis(e.pi);
  for (std::size_t q = 0; q < image_i.dim(); ++q) {
    const Vector& w = image_i.vectors()[q];
    if (!is_zero(e.pi.apply(w))) report.add({"exactness", {q}, e.pi.apply(w), zero_vector(e.l.dim())});
  }
  for (std::size_t q = 0; q < ker_pi.dim(); ++q) {
    const Vector& w = ker_pi.vectors()[q];
    if (!in_span(image_i, w)) report.add({"exactness", {q}, w, zero_vector(e.m.dim())});
  }
  return report;
}

ExtensionFlags classify(const ShortExactSequence& e) {
  if (!check_exact(e).passed) throw PreconditionError("classify: the sequence is not exact");
  ExtensionFlags flags;
  flags.abelian = e.v.is_abelian();
  flags.central = true;
  for (std::size_t p = 0; p < e.v.dim() && flags.central; ++p) {
    const Vector ip = e.i.column(p);
    for (std::size_t q = 0; q < e.m.dim(); ++q) {
      const Vector eq = unit_vector(e.m.dim(), q);
      if (!is_zero(bracket_eval(e.m, ip, eq)) || !is_zero(bracket_eval(e.m, eq, ip))) {
        flags.central = false;
        break;
      }
    }
  }
  flags.split = find_section(e, Complement::kSubalgebra).status;
  flags.trivial = find_section(e, Complement::kIdeal).status;
  return flags;
}

Bilinear semidirect_bracket(const SplitExtensionData& data) {
  const std::size_t n = data.l.dim(), m = data.v_module.dim(), big = n + m;
  require_action_shapes(data.l, data.v_module, data.act);
  if (data.theta.left_dim() != n || data.theta.right_dim() != n || data.theta.out_dim() != m) {
    throw InputError("theta must have shape " + std::to_string(n) + "x" + std::to_string(n) + "->" +
                     std::to_string(m));
  }
  if (data.mu.left_dim() != m || data.mu.right_dim() != m || data.mu.out_dim() != m) {
    throw InputError("mu must have shape " + std::to_string(m) + "x" + std::to_string(m) + "->" + std::to_string(m));
  }
  Bilinear d(big, big, big);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) d.at(i, j, k) = data.l.bracket.at(i, j, k);
      for (std::size_t p = 0; p < m; ++p) d.at(i, j, n + p) = data.theta.at(i, j, p);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t p = 0; p < m; ++p) {
        d.at(i, n + q, n + p) = data.act.left.at(i, q, p);
        d.at(n + q, i, n + p) = data.act.right.at(q, i, p);
      }
  for (std::size_t q = 0; q < m; ++q)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t p = 0; p < m; ++p) d.at(n + q, n + r, n + p) = data.mu.at(q, r, p);
  return d;
}

SemidirectSum semidirect_sum(const SplitExtensionData& data) {
  const std::size_t n = data.l.dim(), m = data.v_module.dim();
  BiHomLieAlgebra algebra(data.l.name + "+V", semidirect_bracket(data),
                          block_diagonal(data.l.alpha, data.v_module.alpha_v()),
                          block_diagonal(data.l.beta, data.v_module.beta_v()));
  BiHomLieAlgebra v("V", data.mu, data.v_module.alpha_v(), data.v_module.beta_v());
  Matrix inclusion(n + m, m), projection(n, n + m);
  for (std::size_t p = 0; p < m; ++p) inclusion(n + p, p) = 1;
  for (std::size_t k = 0; k < n; ++k) projection(k, k) = 1;
  ShortExactSequence seq{std::move(v), algebra, data.l, std::move(inclusion), std::move(projection)};
  return {std::move(algebra), std::move(seq)};
}

Matrix SectionFamily::at(const std::vector<Rational>& coefficients) const {
  if (coefficients.size() != directions.size()) throw InputError("section family coefficient count mismatch");
  Matrix s = particular;
  for (std::size_t j = 0; j < directions.size(); ++j) s = s + coefficients[j] * directions[j];
  return s;
}

std::optional<SectionFamily> intertwining_sections(const ShortExactSequence& e) {
  require_sequence_shapes(e);
  const std::size_t nl = e.l.dim(), nv = e.v.dim(), nm = e.m.dim();

  Matrix s0(nm, nl);
  for (std::size_t a = 0; a < nl; ++a) {
    const auto col = solve(e.pi, unit_vector(nl, a));
    if (!col) return std::nullopt;
    for (std::size_t r = 0; r < nm; ++r) s0(r, a) = (*col)[r];
  }

  // s = s0 + i P with P (nv x nl), unknown P[q][a] at q*nl + a.
  // T_M s - s T = 0 for T in {alpha, beta}; entry (r, b) per row.
  Matrix system(2 * nm * nl, nv * nl);
  Vector rhs(2 * nm * nl);
  std::size_t offset = 0;
  for (const auto* pair : {&e.m.alpha, &e.m.beta}) {
    const Matrix& tm = *pair;
    const Matrix& tl = pair == &e.m.alpha ? e.l.alpha : e.l.beta;
    const Matrix base = tm * s0 - s0 * tl;
    const Matrix tm_i = tm * e.i;
    for (std::size_t r = 0; r < nm; ++r)
      for (std::size_t b = 0; b < nl; ++b) {
        const std::size_t row = offset + r * nl + b;
        rhs[row] = -base(r, b);
        for (std::size_t q = 0; q < nv; ++q) {
          system(row, q * nl + b) += tm_i(r, q);
          for (std::size_t a = 0; a < nl; ++a) system(row, q * nl + a) -= e.i(r, q) * tl(a, b);
        }
      }
    offset += nm * nl;
  }
  const auto p0 = solve(system, rhs);
  if (!p0) return std::nullopt;
  SectionFamily family{s0 + e.i * Matrix(nv, nl, *p0), {}};
  const SubspaceBasis free = kernel_basis(system);
  for (const auto& n : free.vectors()) family.directions.push_back(e.i * Matrix(nv, nl, n));
  return family;
}

SectionSearch find_section(const ShortExactSequence& e, Complement complement) {
  const auto family = intertwining_sections(e);
  if (!family) return {Decision::kNo, std::nullopt};
  const QuadraticSystem sys = closure_system(e, *family, complement);
  const std::size_t k = family->directions.size();

  if (!sys.has_quadratic_terms()) {
    const auto r = solve(Matrix::from_columns(sys.linear, sys.constant.size()), -sys.constant);
    if (!r) return {Decision::kNo, std::nullopt};
    return {Decision::kYes, Section{family->at(*r)}};
  }

  constexpr std::size_t kMaxDim = 6;
  constexpr std::size_t kMaxParameters = 4;
  constexpr int kRange = 2;
  if (e.m.dim() > kMaxDim || k > kMaxParameters) return {Decision::kUndecided, std::nullopt};
  std::vector<Rational> r(k, Rational(-kRange));
  do {
    if (is_zero(sys.residual(r))) return {Decision::kYes, Section{family->at(r)}};
  } while (next_coefficients(r, -kRange, kRange));
  return {Decision::kUndecided, std::nullopt};
}

SplitExtensionData decompose_split_extension(const ShortExactSequence& e, const Section& s) {
  require_sequence_shapes(e);
  const std::size_t nl = e.l.dim(), nv = e.v.dim(), nm = e.m.dim();
  const Matrix& sm = s.matrix;
  if (sm.rows() != nm || sm.cols() != nl) throw InputError("section must be " + std::to_string(nm) + "x" + std::to_string(nl));
  if (e.pi * sm != Matrix::identity(nl)) throw PreconditionError("decompose: pi o s is not the identity");
  if (e.m.alpha * sm != sm * e.l.alpha || e.m.beta * sm != sm * e.l.beta) {
    throw PreconditionError("decompose: the section does not intertwine the twists");
  }
  const Matrix phi = hstack(sm, e.i);
  const auto phi_inv = inverse(phi);
  if (!phi_inv) throw PreconditionError("decompose: s(L) and i(V) do not span M as a direct sum");

  const std::size_t big = nl + nv;
  std::vector<Vector> images(big);
  for (std::size_t a = 0; a < big; ++a) images[a] = phi.column(a);
  auto transported = [&](std::size_t a, std::size_t b) { return phi_inv->apply(e.m.bracket.eval(images[a], images[b])); };

  Bilinear delta(nl, nl, nl), theta(nl, nl, nv), left(nl, nv, nv), right(nv, nl, nv), mu(nv, nv, nv);
  for (std::size_t x = 0; x < nl; ++x)
    for (std::size_t y = 0; y < nl; ++y) {
      const Vector w = transported(x, y);
      for (std::size_t k = 0; k < nl; ++k) delta.at(x, y, k) = w[k];
      for (std::size_t p = 0; p < nv; ++p) theta.at(x, y, p) = w[nl + p];
    }
  for (std::size_t x = 0; x < nl; ++x)
    for (std::size_t q = 0; q < nv; ++q) {
      const Vector wl = transported(x, nl + q), wr = transported(nl + q, x);
      for (std::size_t p = 0; p < nv; ++p) {
        left.at(x, q, p) = wl[nl + p];
        right.at(q, x, p) = wr[nl + p];
      }
    }
  for (std::size_t q = 0; q < nv; ++q)
    for (std::size_t r = 0; r < nv; ++r) {
      const Vector w = transported(nl + q, nl + r);
      for (std::size_t p = 0; p < nv; ++p) mu.at(q, r, p) = w[nl + p];
    }
  return {BiHomLieAlgebra(e.l.name, std::move(delta), e.l.alpha, e.l.beta), BiHomModule(e.v.alpha, e.v.beta),
          ActionPair{std::move(left), std::move(right)}, std::move(theta), std::move(mu)};
}

AxiomReport check_equivalence(const ShortExactSequence& e1, const ShortExactSequence& e2, const Matrix& phi,
                              const Matrix& phi_v, const Matrix& s_l) {
  require_sequence_shapes(e1);
  require_sequence_shapes(e2);
  if (phi_v.rows() != e2.v.dim() || phi_v.cols() != e1.v.dim()) throw InputError("phi_v has the wrong shape");
  if (s_l.rows() != e2.l.dim() || s_l.cols() != e1.l.dim()) throw InputError("s has the wrong shape");
  AxiomReport report = is_morphism(AlgebraMap{e1.m, e2.m, phi});
  if (phi.rows() != phi.cols() || !inverse(phi)) {
    report.add({"bijective", {}, Vector{Rational(static_cast<long>(rank(phi)))},
                Vector{Rational(static_cast<long>(e2.m.dim()))}});
  }
  const Matrix left_top = phi * e1.i, right_top = e2.i * phi_v;
  for (std::size_t c = 0; c < left_top.cols(); ++c)
    if (left_top.column(c) != right_top.column(c))
      report.add({"square-inclusion", {c}, left_top.column(c), right_top.column(c)});
  const Matrix left_bottom = e2.pi * phi, right_bottom = s_l * e1.pi;
  for (std::size_t c = 0; c < left_bottom.cols(); ++c)
    if (left_bottom.column(c) != right_bottom.column(c))
      report.add({"square-projection", {c}, left_bottom.column(c), right_bottom.column(c)});
  return report;
}

CohomologousExtensions extensions_from_cohomologous_cocycles(const BiHomLieAlgebra& l, const BiHomModule& v,
                                                             const ActionPair& act, const Bilinear& theta,
                                                             const Bilinear& theta_prime, const Matrix& h) {
  if (d1(l, v, act, h) != theta_prime - theta) {
    throw PreconditionError("extensions_from_cohomologous_cocycles: d1(h) differs from theta' - theta");
  }
  const std::size_t n = l.dim(), m = v.dim();
  const Bilinear mu(m, m, m);
  auto first = semidirect_sum({l, v, act, theta, mu});
  auto second = semidirect_sum({l, v, act, theta_prime, mu});
  Matrix phi = Matrix::identity(n + m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t x = 0; x < n; ++x) phi(n + p, x) = -h(p, x);
  return {std::move(first.sequence), std::move(second.sequence), std::move(phi)};
}

ExtClass ext_class(const ShortExactSequence& e, const std::optional<Section>& section) {
  if (!e.v.is_abelian()) throw PreconditionError("ext_class: the kernel V must be abelian");
  Section s;
  if (section) {
    s = *section;
  } else {
    const auto family = intertwining_sections(e);
    if (!family) throw NotSplitError("ext_class: no section of pi intertwines the twists");
    s = Section{family->particular};
  }
  SplitExtensionData data = decompose_split_extension(e, s);
  SubspaceBasis b2 = compute_b2(data.l, data.v_module, data.act);
  return {std::move(data), std::move(s), std::move(b2)};
}

ExtensionComparison compare_extensions(const ShortExactSequence& e1, const ShortExactSequence& e2) {
  const ExtClass c1 = ext_class(e1), c2 = ext_class(e2);
  ExtensionComparison out;
  const auto same_algebra = [](const BiHomLieAlgebra& a, const BiHomLieAlgebra& b) {
    return a.bracket == b.bracket && a.alpha == b.alpha && a.beta == b.beta;
  };
  if (!same_algebra(c1.data.l, c2.data.l) || !(c1.data.v_module == c2.data.v_module)) {
    out.reason = "the extensions are of different algebras or modules";
    return out;
  }
  if (!(c1.data.act == c2.data.act)) {
    out.reason = "the induced representations differ";
    return out;
  }
  const auto& l = c1.data.l;
  const auto& v = c1.data.v_module;
  const auto h = cocycles_cohomologous(l, v, c1.data.act, c1.data.theta, c2.data.theta);
  if (!h) {
    out.reason = "the cocycles differ by a non-coboundary";
    return out;
  }
  const std::size_t n = l.dim(), m = v.dim();
  Matrix shift = Matrix::identity(n + m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t x = 0; x < n; ++x) shift(n + p, x) = -(*h)(p, x);
  const Matrix phi1 = hstack(c1.section.matrix, e1.i);
  const Matrix phi2 = hstack(c2.section.matrix, e2.i);
  Matrix phi = phi2 * shift * *inverse(phi1);
  if (!check_equivalence(e1, e2, phi, Matrix::identity(m), Matrix::identity(n)).passed) {
    out.reason = "the cocycles are cohomologous but the transported map is not an equivalence";
    return out;
  }
  out.equivalent = true;
  out.reason = "the cocycles differ by d1(h)";
  out.h = *h;
  out.phi = std::move(phi);
  return out;
}

}  // namespace bihom
