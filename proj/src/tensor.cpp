#include "bihom/tensor.hpp"

#include <string>

#include "bihom/errors.hpp"

namespace bihom {

Bilinear::Bilinear(std::size_t left, std::size_t right, std::size_t out)
    : left_(left), right_(right), out_(out), data_(zero_vector(left * right * out)) {}

Bilinear::Bilinear(std::size_t left, std::size_t right, std::size_t out, Vector coordinates)
    : left_(left), right_(right), out_(out), data_(std::move(coordinates)) {
  if (data_.size() != left * right * out) {
    throw InputError("bilinear map needs " + std::to_string(left * right * out) + " coordinates, got " +
                     std::to_string(data_.size()));
  }
}

Vector Bilinear::value(std::size_t i, std::size_t j) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>((i * right_ + j) * out_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(out_));
}

void Bilinear::set_value(std::size_t i, std::size_t j, const Vector& v) {
  if (v.size() != out_) throw InputError("bilinear value has wrong length");
  for (std::size_t k = 0; k < out_; ++k) at(i, j, k) = v[k];
}

Vector Bilinear::eval(const Vector& x, const Vector& y) const {
  if (x.size() != left_ || y.size() != right_) {
    throw InputError("bilinear argument lengths (" + std::to_string(x.size()) + ", " + std::to_string(y.size()) +
                     ") do not match (" + std::to_string(left_) + ", " + std::to_string(right_) + ")");
  }
  Vector r = zero_vector(out_);
  for (std::size_t i = 0; i < left_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < right_; ++j) {
      if (y[j] == 0) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < out_; ++k) {
        const Rational& c = at(i, j, k);
        if (c != 0) r[k] += s * c;
      }
    }
  }
  return r;
}

bool Bilinear::is_zero() const { return bihom::is_zero(data_); }

Bilinear operator+(const Bilinear& a, const Bilinear& b) {
  if (a.left_dim() != b.left_dim() || a.right_dim() != b.right_dim() || a.out_dim() != b.out_dim()) {
    throw InputError("bilinear sum shape mismatch");
  }
  return Bilinear(a.left_dim(), a.right_dim(), a.out_dim(), a.coordinates() + b.coordinates());
}

Bilinear operator-(const Bilinear& a, const Bilinear& b) { return a + Rational(-1) * b; }

Bilinear operator*(const Rational& s, const Bilinear& a) {
  return Bilinear(a.left_dim(), a.right_dim(), a.out_dim(), s * a.coordinates());
}

Trilinear::Trilinear(std::size_t dim, std::size_t out) : dim_(dim), out_(out), data_(zero_vector(dim * dim * dim * out)) {}

Vector Trilinear::value(std::size_t i, std::size_t j, std::size_t k) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(((i * dim_ + j) * dim_ + k) * out_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(out_));
}

void Trilinear::set_value(std::size_t i, std::size_t j, std::size_t k, const Vector& v) {
  if (v.size() != out_) throw InputError("trilinear value has wrong length");
  for (std::size_t p = 0; p < out_; ++p) data_[((i * dim_ + j) * dim_ + k) * out_ + p] = v[p];
}

bool Trilinear::is_zero() const { return bihom::is_zero(data_); }

Trilinear operator+(const Trilinear& a, const Trilinear& b) {
  if (a.dim() != b.dim() || a.out_dim() != b.out_dim()) throw InputError("trilinear sum shape mismatch");
  Trilinear r(a.dim(), a.out_dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) r.set_value(i, j, k, a.value(i, j, k) + b.value(i, j, k));
  return r;
}

Trilinear operator*(const Rational& s, const Trilinear& a) {
  Trilinear r(a.dim(), a.out_dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) r.set_value(i, j, k, s * a.value(i, j, k));
  return r;
}

}  // namespace bihom
