#ifndef OMATRIX_DIFF_POLY_HPP
#define OMATRIX_DIFF_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "omatrix/rational.hpp"

namespace omatrix {

// Differential symbols are interned names; u, p, v, q serve as dependent
// variables and X, Y, Z, f, g, h as formal test elements adjoined to the
// ring, but nothing in the machinery distinguishes the two roles.
using Sym = int;
Sym diffsym(const std::string& name);
const std::string& diffsym_name(Sym s);

// Ceiling on jet orders; computations that would exceed it throw.
int max_jet_order();
void set_max_jet_order(int order);

/// One factor (symbol, derivative order) ^ exponent; exponents are rational
/// so that fractional powers of the dependent variables are representable.
struct JetFactor {
  Sym sym = 0;
  int order = 0;
  Rational exp;
};

inline bool operator==(const JetFactor& a, const JetFactor& b) {
  return a.sym == b.sym && a.order == b.order && a.exp == b.exp;
}
inline bool operator<(const JetFactor& a, const JetFactor& b) {
  if (a.sym != b.sym) return a.sym < b.sym;
  if (a.order != b.order) return a.order < b.order;
  return a.exp < b.exp;
}

using JetMono = std::vector<JetFactor>;  // sorted by (sym, order), exps nonzero

/// Differential polynomial: exact-coefficient finite sum of jet monomials.
/// The term map is ordered, so printing and iteration are deterministic.
class DiffPoly {
 public:
  DiffPoly() = default;

  static DiffPoly constant(const Rational& c);
  // (sym, order)^exp as a single factor.
  static DiffPoly jet(Sym s, int order = 0, const Rational& exp = Rational(1));
  static DiffPoly var(const std::string& name, int order = 0);

  bool is_zero() const { return terms_.empty(); }
  Rational constant_term() const;

  DiffPoly operator+(const DiffPoly& o) const;
  DiffPoly operator-(const DiffPoly& o) const;
  DiffPoly operator-() const;
  DiffPoly operator*(const DiffPoly& o) const;
  DiffPoly scaled(const Rational& c) const;
  bool operator==(const DiffPoly& o) const;
  bool operator!=(const DiffPoly& o) const { return !(*this == o); }

  // Total derivative: Leibniz over factors, raising each order by one.
  DiffPoly total_derivative() const;
  DiffPoly total_derivative(int times) const;

  // Formal partial with respect to one jet coordinate.
  DiffPoly partial(Sym s, int order) const;

  // Euler operator: sum over n of (-d)^n applied to the partial by (s, n).
  DiffPoly variational_derivative(Sym s) const;

  // Replace every jet of `s` by the matching derivative of `image`;
  // requires the exponents of `s` to be nonnegative integers.
  DiffPoly substitute(Sym s, const DiffPoly& image) const;

  int max_order_of(Sym s) const;
  int max_order() const;
  std::vector<Sym> symbols() const;

  void add_term(const JetMono& mono, const Rational& coeff);
  const std::map<JetMono, Rational>& terms() const { return terms_; }

  std::string to_string() const;

 private:
  std::map<JetMono, Rational> terms_;
};

// All variational derivatives vanish and there is no constant term;
// this decides membership in the image of the total derivative.
bool im_partial_test(const DiffPoly& f);

}  // namespace omatrix

#endif
