#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

/// Dense row-major matrix over the rationals. Empty shapes (0 rows or 0 cols) are legal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  /// Matrix-vector product. Throws InputError on length mismatch.
  Vector apply(const Vector& x) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Matrix power(const Matrix& a, unsigned exponent);

/// Linearly independent vectors of a fixed ambient dimension.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  /// Wraps vectors that the caller guarantees are independent.
  SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors);

  /// Basis of the span of arbitrary (possibly dependent) vectors.
  static SubspaceBasis span_of(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static SubspaceBasis full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<Vector>& vectors() const { return vectors_; }

  /// Columns are the basis vectors (ambient_dim x dim).
  Matrix as_columns() const;

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> vectors_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row echelon form. Pivot rows are picked as the first row (in order)
/// with a nonzero entry in the pivot column.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column in increasing order.
SubspaceBasis kernel_basis(const Matrix& m);

/// Column space, spanned by the pivot columns of m itself.
SubspaceBasis image_basis(const Matrix& m);

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

bool in_span(const SubspaceBasis& basis, const Vector& v);

/// dim(z) - dim(b). Throws ContainmentError if some vector of b is outside span(z).
std::size_t quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b);

}  // namespace bihom
