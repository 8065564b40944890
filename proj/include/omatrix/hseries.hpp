#ifndef OMATRIX_HSERIES_HPP
#define OMATRIX_HSERIES_HPP

#include <array>

#include "omatrix/matrix.hpp"

namespace omatrix {

/// Matrix-valued formal series a0 + h a1 + h^2 a2, truncated at h^3.
/// The truncation order is fixed at two: the quasiclassical analysis only
/// ever extracts the h^2 coefficient, higher orders are out of scope.
class HSeries {
 public:
  static constexpr int kOrder = 2;

  HSeries() = default;
  HSeries(Matrix c0, Matrix c1, Matrix c2);

  static HSeries constant(const Matrix& m);

  const Matrix& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
  int dim() const { return c_[0].rows(); }

  HSeries operator+(const HSeries& o) const;
  HSeries operator-(const HSeries& o) const;
  HSeries operator*(const HSeries& o) const;
  bool operator==(const HSeries& o) const;

 private:
  std::array<Matrix, kOrder + 1> c_;
};

}  // namespace omatrix

#endif
