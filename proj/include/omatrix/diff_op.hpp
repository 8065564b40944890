#ifndef OMATRIX_DIFF_OP_HPP
#define OMATRIX_DIFF_OP_HPP

#include "omatrix/diff_poly.hpp"

namespace omatrix {

/// Scalar ordinary differential operator: finite sum of coefficients
/// composed with powers of the total derivative, sum a_n d^n.
class DiffOp {
 public:
  DiffOp() = default;

  static DiffOp zero() { return DiffOp(); }
  static DiffOp identity() { return mult(DiffPoly::constant(Rational(1))); }
  static DiffOp mult(const DiffPoly& a);              // multiplication operator
  static DiffOp d(int n = 1);                         // d^n
  static DiffOp term(const DiffPoly& a, int n);       // a d^n

  bool is_zero() const { return coeff_.empty(); }
  const std::map<int, DiffPoly>& coeffs() const { return coeff_; }
  DiffPoly coeff(int n) const;

  DiffPoly apply(const DiffPoly& f) const;

  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator-(const DiffOp& o) const;
  DiffOp operator-() const;
  DiffOp operator*(const DiffOp& o) const;  // composition
  DiffOp scaled(const Rational& c) const;
  bool operator==(const DiffOp& o) const;
  bool operator!=(const DiffOp& o) const { return !(*this == o); }

  // (a d^n)^† = (-d)^n a.
  DiffOp adjoint() const;

  // Coefficients pushed through a substitution of a dependent symbol.
  DiffOp substitute(Sym s, const DiffPoly& image) const;

  void add(int n, const DiffPoly& a);

  std::string to_string() const;

 private:
  std::map<int, DiffPoly> coeff_;
};

/// Matrix of scalar operators.
class DiffOpMatrix {
 public:
  DiffOpMatrix() : rows_(0), cols_(0) {}
  DiffOpMatrix(int rows, int cols);

  static DiffOpMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  DiffOp& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const DiffOp& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<DiffPoly> apply(const std::vector<DiffPoly>& v) const;

  DiffOpMatrix operator+(const DiffOpMatrix& o) const;
  DiffOpMatrix operator-(const DiffOpMatrix& o) const;
  DiffOpMatrix operator-() const;
  DiffOpMatrix operator*(const DiffOpMatrix& o) const;
  bool operator==(const DiffOpMatrix& o) const;
  bool operator!=(const DiffOpMatrix& o) const { return !(*this == o); }

  DiffOpMatrix adjoint() const;  // transpose of entrywise adjoints
  DiffOpMatrix substitute(Sym s, const DiffPoly& image) const;
  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<DiffOp> a_;
};

// Row of partials of f by the jets of s, as an operator: sum (df/ds^(n)) d^n.
DiffOp frechet_derivative(const DiffPoly& f, Sym s);

}  // namespace omatrix

#endif
