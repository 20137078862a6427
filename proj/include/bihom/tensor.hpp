#pragma once

#include <cstddef>
#include <vector>

#include "bihom/linalg.hpp"
#include "bihom/rational.hpp"

namespace bihom {

/// A bilinear map A x B -> C stored by its values on basis pairs.
/// The flat entry layout ((i * right + j) * out + k) doubles as the
/// coordinate vector used by the cochain spaces.
class Bilinear {
 public:
  Bilinear() = default;
  Bilinear(std::size_t left, std::size_t right, std::size_t out);
  Bilinear(std::size_t left, std::size_t right, std::size_t out, Vector coordinates);

  std::size_t left_dim() const { return left_; }
  std::size_t right_dim() const { return right_; }
  std::size_t out_dim() const { return out_; }

  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * right_ + j) * out_ + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * right_ + j) * out_ + k]; }

  /// Value on the basis pair (e_i, f_j).
  Vector value(std::size_t i, std::size_t j) const;
  void set_value(std::size_t i, std::size_t j, const Vector& v);

  /// Bilinear extension to arbitrary vectors.
  Vector eval(const Vector& x, const Vector& y) const;

  const Vector& coordinates() const { return data_; }
  bool is_zero() const;

  friend bool operator==(const Bilinear&, const Bilinear&) = default;

 private:
  std::size_t left_ = 0, right_ = 0, out_ = 0;
  Vector data_;
};

Bilinear operator+(const Bilinear& a, const Bilinear& b);
Bilinear operator-(const Bilinear& a, const Bilinear& b);
Bilinear operator*(const Rational& s, const Bilinear& a);

/// A trilinear map U x U x U -> W stored on basis triples.
class Trilinear {
 public:
  Trilinear() = default;
  Trilinear(std::size_t dim, std::size_t out);

  std::size_t dim() const { return dim_; }
  std::size_t out_dim() const { return out_; }

  Vector value(std::size_t i, std::size_t j, std::size_t k) const;
  void set_value(std::size_t i, std::size_t j, std::size_t k, const Vector& v);
  const Vector& coordinates() const { return data_; }
  bool is_zero() const;

  friend bool operator==(const Trilinear&, const Trilinear&) = default;

 private:
  std::size_t dim_ = 0, out_ = 0;
  Vector data_;
};

Trilinear operator+(const Trilinear& a, const Trilinear& b);
Trilinear operator*(const Rational& s, const Trilinear& a);

}  // namespace bihom
