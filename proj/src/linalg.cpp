#include "bihom/linalg.hpp"

#include <string>

#include "bihom/errors.hpp"

namespace bihom {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw InputError("matrix entry count " + std::to_string(entries_.size()) + " does not match shape " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("ragged matrix column " + std::to_string(c));
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_) {
    if (x != 0) return false;
  }
  return true;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) {
    throw InputError("matrix-vector length mismatch: " + std::to_string(cols_) + " vs " + std::to_string(x.size()));
  }
  Vector y = zero_vector(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (a != 0 && x[c] != 0) y[r] += a * x[c];
    }
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  Matrix p(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b(k, c) != 0) p(r, c) += x * b(k, c);
      }
    }
  }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum shape mismatch");
  Matrix s(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) s(r, c) = a(r, c) + b(r, c);
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = s * a(r, c);
  return m;
}

Matrix power(const Matrix& a, unsigned exponent) {
  Matrix result = Matrix::identity(a.rows());
  for (unsigned k = 0; k < exponent; ++k) result = result * a;
  return result;
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors)
    : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_) {
    if (v.size() != ambient_dim_) throw InputError("basis vector length does not match ambient dimension");
  }
}

SubspaceBasis SubspaceBasis::span_of(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return image_basis(Matrix::from_columns(vectors, ambient_dim));
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim) {
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < ambient_dim; ++k) vs.push_back(unit_vector(ambient_dim, k));
  return SubspaceBasis(ambient_dim, std::move(vs));
}

Matrix SubspaceBasis::as_columns() const { return Matrix::from_columns(vectors_, ambient_dim_); }

namespace {

using IntRow = std::vector<mpz_class>;

// Scales a rational row to a primitive integer row with the same RREF.
IntRow integer_row(const Vector& row) {
  mpz_class lcm = 1;
  for (const auto& q : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  IntRow out(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) out[k] = row[k].get_num() * (lcm / row[k].get_den());
  return out;
}

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

RrefResult rref(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<IntRow> a;
  a.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) a.push_back(integer_row(m.row(r)));

  // Fraction-free Gauss-Jordan: row_i <- p*row_i - a_ic*row_pivot, then divide
  // out the row content. Division by the pivot is deferred to the end.
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t r = next; r < rows; ++r) {
      if (a[r][c] != 0) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    std::swap(a[next], a[found]);
    const mpz_class p = a[next][c];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next || a[r][c] == 0) continue;
      const mpz_class f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = p * a[r][k] - f * a[next][k];
      make_primitive(a[r]);
    }
    pivots.push_back(c);
    ++next;
  }

  Matrix reduced(rows, cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const mpz_class& p = a[r][pivots[r]];
    for (std::size_t k = 0; k < cols; ++k) {
      if (a[r][k] == 0) continue;
      Rational q(a[r][k], p);
      q.canonicalize();
      reduced(r, k) = q;
    }
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

SubspaceBasis kernel_basis(const Matrix& m) {
  const auto rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(cols);
    x[f] = 1;
    for (std::size_t k = 0; k < rr.pivot_columns.size(); ++k) x[rr.pivot_columns[k]] = -rr.reduced(k, f);
    basis.push_back(std::move(x));
  }
  return SubspaceBasis(cols, std::move(basis));
}

SubspaceBasis image_basis(const Matrix& m) {
  const auto rr = rref(m);
  std::vector<Vector> basis;
  for (auto c : rr.pivot_columns) basis.push_back(m.column(c));
  return SubspaceBasis(m.rows(), std::move(basis));
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) {
    throw InputError("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                     std::to_string(a.rows()));
  }
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto rr = rref(aug);
  if (!rr.pivot_columns.empty() && rr.pivot_columns.back() == a.cols()) return std::nullopt;
  Vector x = zero_vector(a.cols());
  for (std::size_t k = 0; k < rr.pivot_columns.size(); ++k) x[rr.pivot_columns[k]] = rr.reduced(k, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  const auto rr = rref(aug);
  for (std::size_t k = 0; k < n; ++k) {
    if (rr.pivot_columns[k] != k) return std::nullopt;
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.reduced(r, n + c);
  return inv;
}

bool in_span(const SubspaceBasis& basis, const Vector& v) {
  if (v.size() != basis.ambient_dim()) {
    throw InputError("in_span: vector length " + std::to_string(v.size()) + " vs ambient dimension " +
                     std::to_string(basis.ambient_dim()));
  }
  if (is_zero(v)) return true;
  return solve(basis.as_columns(), v).has_value();
}

std::size_t quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b) {
  if (z.ambient_dim() != b.ambient_dim()) throw InputError("quotient_dim: ambient dimensions differ");
  for (std::size_t k = 0; k < b.dim(); ++k) {
    if (!in_span(z, b.vectors()[k])) {
      throw ContainmentError("quotient_dim: vector " + std::to_string(k) + " of the subspace is not in the ambient span");
    }
  }
  return z.dim() - b.dim();
}

}  // namespace bihom
