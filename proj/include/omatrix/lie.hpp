#ifndef OMATRIX_LIE_HPP
#define OMATRIX_LIE_HPP

#include <string>
#include <vector>

#include "omatrix/matrix.hpp"
#include "omatrix/yang_baxter.hpp"

namespace omatrix {

/// Dense rank-3 array of rationals.  Index convention throughout:
/// structure constants c(i,j,k) carry (lower, lower, upper), module actions
/// chi(i,alpha,gamma) carry (algebra, module, module-out).
struct Rank3 {
  int d0 = 0, d1 = 0, d2 = 0;
  std::vector<Rational> v;

  Rank3() = default;
  Rank3(int a, int b, int c)
      : d0(a), d1(b), d2(c), v(static_cast<std::size_t>(a) * b * c, Rational(0)) {}

  Rational& at(int i, int j, int k) {
    return v[(static_cast<std::size_t>(i) * d1 + j) * d2 + k];
  }
  const Rational& at(int i, int j, int k) const {
    return v[(static_cast<std::size_t>(i) * d1 + j) * d2 + k];
  }
  bool operator==(const Rank3& o) const {
    return d0 == o.d0 && d1 == o.d1 && d2 == o.d2 && v == o.v;
  }
  Tensor to_tensor() const;
};

// Jacobi defect of a bracket tensor (lower, lower, upper), summed over all
// basis triples; index (i,j,k,component).
Tensor bracket_jacobi_defect(const Rank3& c);

// Antisymmetry in the two lower slots.
bool bracket_is_skew(const Rank3& c);

class LieAlgebra {
 public:
  static LieAlgebra from_structure(Rank3 c, std::vector<std::string> names = {},
                                   bool defer_jacobi = false);
  static LieAlgebra abelian(int n);
  static LieAlgebra sl2();     // basis (h, e, f)
  static LieAlgebra borel2();  // span(h, e) in sl2
  static LieAlgebra gl2();     // 2x2 matrix units under commutator

  int dim() const { return dim_; }
  const Rank3& c() const { return c_; }
  const std::vector<std::string>& names() const { return names_; }

  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;
  Matrix ad(int i) const;

 private:
  LieAlgebra(int dim, Rank3 c, std::vector<std::string> names)
      : dim_(dim), c_(std::move(c)), names_(std::move(names)) {}

  int dim_;
  Rank3 c_;
  std::vector<std::string> names_;
};

YBReport jacobi_check(const LieAlgebra& l);

class Representation {
 public:
  Representation(LieAlgebra algebra, int dim_v, Rank3 chi);

  static Representation coadjoint(const LieAlgebra& l);
  static Representation trivial(const LieAlgebra& l, int dim_v);
  static Representation sl2_fundamental(const LieAlgebra& sl2);
  static Representation from_matrices(const LieAlgebra& l, const std::vector<Matrix>& mats);

  const LieAlgebra& algebra() const { return algebra_; }
  int dim_v() const { return dim_v_; }
  const Rank3& chi() const { return chi_; }

  Matrix matrix_of(int i) const;
  // Action of an algebra element (coefficient vector) on a module vector.
  std::vector<Rational> act(const std::vector<Rational>& x,
                            const std::vector<Rational>& v) const;

  // chi([e_i,e_j]) - [chi(e_i), chi(e_j)] over all pairs.
  Tensor defect() const;
  bool is_valid() const { return defect().is_zero(); }

  Representation dual() const;  // chi^d(X) = -chi(X)^T
  Representation direct_sum(const Representation& o) const;

 private:
  LieAlgebra algebra_;
  int dim_v_;
  Rank3 chi_;
};

/// Linear map from a module into the algebra, held as a matrix whose column
/// a is the image of the a-th module basis vector.
struct OOperator {
  Representation source;
  LieAlgebra target;
  Matrix m;  // target.dim x source.dim_v

  std::vector<Rational> apply(const std::vector<Rational>& u) const { return m.apply(u); }
  bool is_skew() const { return m.is_skew(); }
};

// Mutually inverse conversions between a coefficient array r and the map
// it defines out of the coordinate dual: <u, O(v)> = <u (x) v, r>.
OOperator r_to_operator(const LieAlgebra& l, const Tensor& r);
Tensor operator_to_r(const OOperator& o);

// The three-commutator tensor, indices (s,t,w), computed from structure
// constants; only skew inputs are accepted.
Tensor cybe_defect(const LieAlgebra& l, const Tensor& r);

// O(O(u).v - O(v).u) - [O(u), O(v)] over basis pairs of the module;
// indices (a, b, algebra component).
Tensor o_equation_defect(const OOperator& o);

/// A skew product installed on a module by a verified operator.
struct AlgebraOnModule {
  int dim = 0;
  Rank3 bracket;
};

// [u, v] = O(u).v - O(v).u.  Requires a zero defect; the result is checked
// to satisfy Jacobi, which must hold whenever the defect vanishes.
AlgebraOnModule induced_bracket(const OOperator& o);

// The pairing form on the dual is closed for the induced bracket.
YBReport induced_cocycle_check(const OOperator& o);

struct DrinfeldReport {
  Matrix omega;           // omega(i,j) = <O^{-1}(e_i), e_j>
  Tensor cocycle_defect;  // omega(e_i, [e_j, e_k]) + cyclic
  Tensor o_defect;
  Tensor cybe;
  bool cocycle_holds = false;
  bool cybe_holds = false;
  bool equivalence_agrees = false;
  bool pairing_identity_holds = false;
};

// For invertible skew r: the inverse pairing form is closed iff the
// three-commutator tensor vanishes, and the two defects are linked by an
// exact pairing identity which is asserted entrywise.
DrinfeldReport drinfeld_equivalence(const LieAlgebra& l, const Tensor& r);

bool is_homomorphism(const Matrix& phi, const LieAlgebra& g, const LieAlgebra& h);

struct PushForwardReport {
  OOperator pushed;
  bool o_equation_holds = false;
  bool intertwining_holds = false;
  bool dual_homomorphism_holds = false;
};

// phi O phi^T along a verified homomorphism phi: G -> H; the result is an
// operator on the dual of H and the dual map intertwines the induced
// brackets.  phi is re-verified, never trusted.
PushForwardReport push_forward(const Matrix& phi, const LieAlgebra& g, const LieAlgebra& h,
                               const OOperator& o_g);

}  // namespace omatrix

#endif
