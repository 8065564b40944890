#include "omatrix/embed.hpp"

#include <stdexcept>

namespace omatrix {

Matrix permutation_operator(int dim_v) {
  if (dim_v <= 0) throw std::invalid_argument("permutation operator needs positive dimension");
  Matrix p(dim_v * dim_v, dim_v * dim_v);
  for (int i = 0; i < dim_v; ++i)
    for (int j = 0; j < dim_v; ++j) p(j * dim_v + i, i * dim_v + j) = 1;
  return p;
}

Matrix mirror_operator(int dim_v) {
  int d = dim_v, d3 = d * d * d;
  Matrix m(d3, d3);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) m((k * d + j) * d + i, (i * d + j) * d + k) = 1;
  return m;
}

Matrix embed_pair(const Matrix& a, Slot slot, int dim_v) {
  int d = dim_v;
  if (a.rows() != d * d || a.cols() != d * d)
    throw std::invalid_argument("embed_pair: operator must act on V (x) V");
  switch (slot) {
    case Slot::s12:
      return kron(a, Matrix::identity(d));
    case Slot::s23:
      return kron(Matrix::identity(d), a);
    case Slot::s13: {
      // Coordinate rule: a13 (e_i (x) e_j (x) e_k) = sum a^{cd}_{ik} e_c (x) e_j (x) e_d.
      int d3 = d * d * d;
      Matrix out(d3, d3);
      for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
          for (int c = 0; c < d; ++c)
            for (int e = 0; e < d; ++e) {
              const Rational& v = a(c * d + e, i * d + k);
              if (v == 0) continue;
              for (int j = 0; j < d; ++j) out((c * d + j) * d + e, (i * d + j) * d + k) = v;
            }
      // The invariant definition through slot swaps must agree with the
      // coordinate rule; a discrepancy means a broken index convention.
      Matrix p23 = kron(Matrix::identity(d), permutation_operator(d));
      if (out != p23 * kron(a, Matrix::identity(d)) * p23)
        throw std::logic_error("embed_pair: middle-slot embedding failed cross-validation");
      return out;
    }
  }
  throw std::logic_error("embed_pair: unreachable");
}

}  // namespace omatrix
