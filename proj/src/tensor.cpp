#include "omatrix/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace omatrix {

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
  for (int d : shape_)
    if (d <= 0) throw std::invalid_argument("tensor dimensions must be positive");
}

void Tensor::check_index(const MultiIndex& idx) const {
  if (idx.size() != shape_.size())
    throw std::invalid_argument("tensor index rank mismatch");
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (idx[k] < 0 || idx[k] >= shape_[k])
      throw std::invalid_argument("tensor index out of bounds");
}

Rational Tensor::at(const MultiIndex& idx) const {
  check_index(idx);
  auto it = entries_.find(idx);
  return it == entries_.end() ? Rational(0) : it->second;
}

void Tensor::set(const MultiIndex& idx, const Rational& value) {
  check_index(idx);
  if (value == 0)
    entries_.erase(idx);
  else
    entries_[idx] = value;
}

void Tensor::add_at(const MultiIndex& idx, const Rational& value) {
  check_index(idx);
  auto it = entries_.find(idx);
  if (it == entries_.end()) {
    if (value != 0) entries_.emplace(idx, value);
    return;
  }
  it->second += value;
  if (it->second == 0) entries_.erase(it);
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("tensor shape mismatch");
  Tensor out = *this;
  for (const auto& [idx, v] : o.entries_) out.add_at(idx, v);
  return out;
}

Tensor Tensor::operator-(const Tensor& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("tensor shape mismatch");
  Tensor out = *this;
  for (const auto& [idx, v] : o.entries_) out.add_at(idx, -v);
  return out;
}

Tensor Tensor::operator-() const { return scaled(Rational(-1)); }

Tensor Tensor::scaled(const Rational& c) const {
  Tensor out(shape_);
  if (c == 0) return out;
  for (const auto& [idx, v] : entries_) out.entries_.emplace(idx, c * v);
  return out;
}

bool Tensor::operator==(const Tensor& o) const {
  return shape_ == o.shape_ && entries_ == o.entries_;
}

std::vector<std::pair<MultiIndex, Rational>> Tensor::witnesses(std::size_t limit) const {
  std::vector<std::pair<MultiIndex, Rational>> out;
  for (const auto& [idx, v] : entries_) {
    if (out.size() >= limit) break;
    out.emplace_back(idx, v);
  }
  return out;
}

std::string Tensor::to_string(std::size_t limit) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& [idx, v] : entries_) {
    if (shown == limit) {
      os << " ...";
      break;
    }
    if (shown) os << " ";
    os << "[";
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
    os << "]=" << rat_str(v);
    ++shown;
  }
  return os.str();
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  std::vector<int> shape = a.shape();
  shape.insert(shape.end(), b.shape().begin(), b.shape().end());
  Tensor out(shape);
  for (const auto& [ia, va] : a.entries())
    for (const auto& [ib, vb] : b.entries()) {
      MultiIndex idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.set(idx, va * vb);
    }
  return out;
}

}  // namespace omatrix
