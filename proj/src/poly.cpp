#include "omatrix/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace omatrix {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  Poly p(nvars);
  std::vector<int> e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void Poly::add_term(const std::vector<int>& exponents, const Rational& coeff) {
  if (static_cast<int>(exponents.size()) != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (coeff == 0) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial ring mismatch");
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial ring mismatch");
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial ring mismatch");
  Poly out(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(nvars_);
      for (int k = 0; k < nvars_; ++k) e[k] = e1[k] + e2[k];
      out.add_term(e, c1 * c2);
    }
  return out;
}

Poly Poly::scaled(const Rational& c) const {
  Poly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.add_term(e, c * v);
  return out;
}

bool Poly::operator==(const Poly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Poly Poly::derivative(int var) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<int> de = e;
    de[var] -= 1;
    out.add_term(de, c * Rational(e[var]));
  }
  return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("one image per variable required");
  int target_vars = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != target_vars) throw std::invalid_argument("image ring mismatch");
  Poly out(target_vars);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(target_vars, c);
    for (int k = 0; k < nvars_; ++k)
      for (int p = 0; p < e[k]; ++p) term = term * images[k];
    out = out + term;
  }
  return out;
}

int Poly::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    if (d > deg) deg = d;
  }
  return deg;
}

std::string Poly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      os << "*" << (k < static_cast<int>(var_names.size()) ? var_names[k]
                                                           : "v" + std::to_string(k));
      if (e[k] != 1) os << "^" << e[k];
    }
  }
  return os.str();
}

}  // namespace omatrix
