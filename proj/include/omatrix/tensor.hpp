#ifndef OMATRIX_TENSOR_HPP
#define OMATRIX_TENSOR_HPP

#include <map>
#include <string>
#include <vector>

#include "omatrix/rational.hpp"

namespace omatrix {

using MultiIndex = std::vector<int>;

/// Sparse tensor over the rationals.  Zero entries are never stored, and
/// iteration over `entries` is lexicographic in the multi-index, so any
/// output derived from a tensor is reproducible.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }

  Rational at(const MultiIndex& idx) const;
  void set(const MultiIndex& idx, const Rational& value);
  void add_at(const MultiIndex& idx, const Rational& value);

  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator-() const;
  Tensor scaled(const Rational& c) const;
  bool operator==(const Tensor& o) const;

  const std::map<MultiIndex, Rational>& entries() const { return entries_; }

  // First `limit` nonzero entries in lexicographic order, for reports.
  std::vector<std::pair<MultiIndex, Rational>> witnesses(std::size_t limit) const;

  std::string to_string(std::size_t limit = 10) const;

 private:
  void check_index(const MultiIndex& idx) const;

  std::vector<int> shape_;
  std::map<MultiIndex, Rational> entries_;
};

// Entries of the product are products of entries; the shape is the
// concatenation of the operand shapes.
Tensor tensor_product(const Tensor& a, const Tensor& b);

}  // namespace omatrix

#endif
