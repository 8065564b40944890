#ifndef OMATRIX_POLY_HPP
#define OMATRIX_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "omatrix/rational.hpp"

namespace omatrix {

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables.  Monomials are exponent vectors ordered lexicographically;
/// the zero polynomial stores no terms.
class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(int var) const;

  // Simultaneous substitution of every variable; images live in a ring
  // with their own variable count.
  Poly substitute(const std::vector<Poly>& images) const;

  int total_degree() const;

  void add_term(const std::vector<int>& exponents, const Rational& coeff);

  std::string to_string(const std::vector<std::string>& var_names) const;

 private:
  int nvars_;
  std::map<std::vector<int>, Rational> terms_;
};

}  // namespace omatrix

#endif
