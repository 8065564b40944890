#include "omatrix/diff_op.hpp"

#include <sstream>
#include <stdexcept>

namespace omatrix {

namespace {

Rational binomial(int n, int k) {
  Rational out(1);
  for (int i = 0; i < k; ++i) out *= make_rat(n - i, i + 1);
  return out;
}

}  // namespace

DiffOp DiffOp::mult(const DiffPoly& a) {
  DiffOp op;
  op.add(0, a);
  return op;
}

DiffOp DiffOp::d(int n) {
  DiffOp op;
  op.add(n, DiffPoly::constant(Rational(1)));
  return op;
}

DiffOp DiffOp::term(const DiffPoly& a, int n) {
  DiffOp op;
  op.add(n, a);
  return op;
}

DiffPoly DiffOp::coeff(int n) const {
  auto it = coeff_.find(n);
  return it == coeff_.end() ? DiffPoly() : it->second;
}

void DiffOp::add(int n, const DiffPoly& a) {
  if (n < 0) throw std::invalid_argument("negative powers of the derivative do not exist here");
  if (a.is_zero()) return;
  auto it = coeff_.find(n);
  if (it == coeff_.end()) {
    coeff_.emplace(n, a);
    return;
  }
  it->second = it->second + a;
  if (it->second.is_zero()) coeff_.erase(it);
}

DiffPoly DiffOp::apply(const DiffPoly& f) const {
  DiffPoly out;
  for (const auto& [n, a] : coeff_) out = out + a * f.total_derivative(n);
  return out;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  DiffOp out = *this;
  for (const auto& [n, a] : o.coeff_) out.add(n, a);
  return out;
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
  DiffOp out = *this;
  for (const auto& [n, a] : o.coeff_) out.add(n, -a);
  return out;
}

DiffOp DiffOp::operator-() const { return scaled(Rational(-1)); }

DiffOp DiffOp::operator*(const DiffOp& o) const {
  // (a d^m)(b d^n) = sum_j C(m, j) a d^j(b) d^{m-j+n}
  DiffOp out;
  for (const auto& [m, a] : coeff_)
    for (const auto& [n, b] : o.coeff_)
      for (int j = 0; j <= m; ++j) out.add(m - j + n, a.scaled(binomial(m, j)) * b.total_derivative(j));
  return out;
}

DiffOp DiffOp::scaled(const Rational& c) const {
  DiffOp out;
  if (c == 0) return out;
  for (const auto& [n, a] : coeff_) out.coeff_.emplace(n, a.scaled(c));
  return out;
}

bool DiffOp::operator==(const DiffOp& o) const { return coeff_ == o.coeff_; }

DiffOp DiffOp::adjoint() const {
  // (a d^n)^† = (-1)^n d^n a = sum_j (-1)^n C(n, j) d^j(a) d^{n-j}
  DiffOp out;
  for (const auto& [n, a] : coeff_) {
    Rational sign((n % 2 == 0) ? 1 : -1);
    for (int j = 0; j <= n; ++j)
      out.add(n - j, a.total_derivative(j).scaled(sign * binomial(n, j)));
  }
  return out;
}

DiffOp DiffOp::substitute(Sym s, const DiffPoly& image) const {
  DiffOp out;
  for (const auto& [n, a] : coeff_) out.add(n, a.substitute(s, image));
  return out;
}

std::string DiffOp::to_string() const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, a] : coeff_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << a.to_string() << ")";
    if (n == 1) os << " d";
    if (n > 1) os << " d^" << n;
  }
  return os.str();
}

DiffOpMatrix::DiffOpMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  a_.assign(static_cast<std::size_t>(rows) * cols, DiffOp());
}

DiffOpMatrix DiffOpMatrix::identity(int n) {
  DiffOpMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = DiffOp::identity();
  return m;
}

std::vector<DiffPoly> DiffOpMatrix::apply(const std::vector<DiffPoly>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("operator matrix applied to a vector of wrong length");
  std::vector<DiffPoly> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[i] = out[i] + at(i, j).apply(v[j]);
  return out;
}

DiffOpMatrix DiffOpMatrix::operator+(const DiffOpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  DiffOpMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) + o.at(i, j);
  return out;
}

DiffOpMatrix DiffOpMatrix::operator-(const DiffOpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  DiffOpMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) - o.at(i, j);
  return out;
}

DiffOpMatrix DiffOpMatrix::operator-() const {
  DiffOpMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = -at(i, j);
  return out;
}

DiffOpMatrix DiffOpMatrix::operator*(const DiffOpMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in composition");
  DiffOpMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
    }
  return out;
}

bool DiffOpMatrix::operator==(const DiffOpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(at(i, j) == o.at(i, j))) return false;
  return true;
}

DiffOpMatrix DiffOpMatrix::adjoint() const {
  DiffOpMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).adjoint();
  return out;
}

DiffOpMatrix DiffOpMatrix::substitute(Sym s, const DiffPoly& image) const {
  DiffOpMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).substitute(s, image);
  return out;
}

bool DiffOpMatrix::is_zero() const {
  for (const auto& op : a_)
    if (!op.is_zero()) return false;
  return true;
}

DiffOp frechet_derivative(const DiffPoly& f, Sym s) {
  DiffOp out;
  for (int n = 0; n <= f.max_order_of(s); ++n) out.add(n, f.partial(s, n));
  return out;
}

}  // namespace omatrix
