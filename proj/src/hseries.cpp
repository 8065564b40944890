#include "omatrix/hseries.hpp"

#include <stdexcept>

namespace omatrix {

HSeries::HSeries(Matrix c0, Matrix c1, Matrix c2) : c_{std::move(c0), std::move(c1), std::move(c2)} {
  for (int k = 0; k <= kOrder; ++k)
    if (c_[k].rows() != c_[0].rows() || c_[k].cols() != c_[0].cols() ||
        c_[k].rows() != c_[k].cols())
      throw std::invalid_argument("h-series coefficients must be square of one shape");
}

HSeries HSeries::constant(const Matrix& m) {
  int n = m.rows();
  return HSeries(m, Matrix::zero(n, n), Matrix::zero(n, n));
}

HSeries HSeries::operator+(const HSeries& o) const {
  return HSeries(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]);
}

HSeries HSeries::operator-(const HSeries& o) const {
  return HSeries(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]);
}

HSeries HSeries::operator*(const HSeries& o) const {
  // Truncates at h^3 exactly.
  return HSeries(c_[0] * o.c_[0],
                 c_[0] * o.c_[1] + c_[1] * o.c_[0],
                 c_[0] * o.c_[2] + c_[1] * o.c_[1] + c_[2] * o.c_[0]);
}

bool HSeries::operator==(const HSeries& o) const {
  return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
}

}  // namespace omatrix
