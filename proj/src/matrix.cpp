#include "omatrix/matrix.hpp"

#include <stdexcept>

namespace omatrix {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in +");
  Matrix out(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + o.a_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in -");
  Matrix out(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - o.a_[k];
  return out;
}

Matrix Matrix::operator-() const { return scaled(Rational(-1)); }

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& bkj = o(k, j);
        if (bkj != 0) out(i, j) += aik * bkj;
      }
    }
  return out;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix out(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = c * a_[k];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool Matrix::is_skew() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j <= i; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  int n = rows_;
  Matrix work = *this;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (work(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    Rational p = work(col, col);
    for (int j = 0; j < n; ++j) {
      work(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work(r, col) == 0) continue;
      Rational f = work(r, col);
      for (int j = 0; j < n; ++j) {
        work(r, j) -= f * work(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Tensor Matrix::to_tensor() const {
  Tensor t({rows_, cols_});
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) t.set({i, j}, (*this)(i, j));
  return t;
}

Matrix Matrix::from_tensor(const Tensor& t) {
  if (t.rank() != 2) throw std::invalid_argument("matrix requires a rank-2 tensor");
  Matrix m(t.shape()[0], t.shape()[1]);
  for (const auto& [idx, v] : t.entries()) m(idx[0], idx[1]) = v;
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("commutator requires equal square matrices");
  return a * b - b * a;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

}  // namespace omatrix
