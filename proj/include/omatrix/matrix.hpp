#ifndef OMATRIX_MATRIX_HPP
#define OMATRIX_MATRIX_HPP

#include <optional>
#include <vector>

#include "omatrix/rational.hpp"
#include "omatrix/tensor.hpp"

namespace omatrix {

/// Dense rational matrix.  Dimensions here stay small (at most dim^3 for
/// triple tensor spaces), so dense storage and cubic multiplication are fine.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix zero(int n, int m) { return Matrix(n, m); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_skew() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  // Exact Gauss-Jordan; empty when singular.
  std::optional<Matrix> inverse() const;

  Tensor to_tensor() const;
  static Matrix from_tensor(const Tensor& t);

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

// Kronecker product with row-major index flattening: the (i,j) block of
// kron(a, b) is a(i,j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace omatrix

#endif
