#ifndef OMATRIX_RANDOM_HPP
#define OMATRIX_RANDOM_HPP

#include <cstdint>
#include <random>

#include "omatrix/lie.hpp"

namespace omatrix {

/// Deterministic generator for property checks.  Entries stay in {-2..2}
/// so exact arithmetic remains readable in witnesses.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long pick(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen_);
  }

  Rational small() { return Rational(pick(-2, 2)); }

  Matrix matrix(int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = small();
    return m;
  }

  Matrix skew(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        m(i, j) = small();
        m(j, i) = -m(i, j);
      }
    return m;
  }

  Matrix invertible(int n) {
    for (;;) {
      Matrix m = matrix(n, n);
      if (m.inverse()) return m;
    }
  }

  Matrix skew_invertible(int n) {
    for (;;) {
      Matrix m = skew(n);
      if (m.inverse()) return m;
    }
  }

  Tensor skew_tensor(int n) { return skew(n).to_tensor(); }

  // Random skew bracket tensor, not necessarily Jacobi.
  Rank3 skew_bracket(int n) {
    Rank3 c(n, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          c.at(i, j, k) = small();
          c.at(j, i, k) = -c.at(i, j, k);
        }
    return c;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace omatrix

#endif
