#ifndef OMATRIX_DOUBLES_HPP
#define OMATRIX_DOUBLES_HPP

#include "omatrix/lie.hpp"

namespace omatrix {

/// A bilinear product with no symmetry assumptions; quasiassociativity is
/// something to check, not an invariant.
struct BilinearProduct {
  int dim = 0;
  Rank3 m;  // (e_i e_j)^k = m(i,j,k)

  static BilinearProduct matrix_units(int n);

  std::vector<Rational> mul(const std::vector<Rational>& a,
                            const std::vector<Rational>& b) const;
  // Bracket tensor of xy - yx.
  Rank3 commutator_tensor() const;
};

/// Bracket on the direct sum of an algebra and its coordinate dual, with a
/// tag recording which construction produced it.
struct DoubleAlgebra {
  enum class Kind { crossed, semidirect, symplectic_double };
  Kind kind;
  int half_dim = 0;
  Rank3 bracket;  // 2N x 2N x 2N, first block the algebra, second the dual
};

struct CrossedReport {
  DoubleAlgebra d;
  Tensor direct_jacobi;
  Tensor quadrilinear;  // indexed (dual, dual, algebra, algebra)
  bool direct_holds = false;
  bool quadrilinear_holds = false;
  bool pairing_ad_invariant = false;
};

// Skew bracket mixing both coadjoint actions.  Both the direct Jacobi
// defect and the quadrilinear criterion are computed independently and
// reported; nothing is assumed about either.
CrossedReport crossed_bracket(const LieAlgebra& l, const Rank3& dual_bracket);

struct CrossedCocycleReport {
  Tensor defect;
  bool holds = false;
  bool algebra_abelian = false;
  bool dual_abelian = false;
};

// The difference form <u,Y> - <v,X> is closed on the crossed algebra only
// when both halves are abelian; the equivalence is asserted.
CrossedCocycleReport symplectic_cocycle_on_crossed(const DoubleAlgebra& d);

// Semidirect sum along any valid module structure on the dual space.
DoubleAlgebra semidirect_sum(const LieAlgebra& l, const Representation& rho);

struct CocycleCriterionReport {
  Tensor direct_defect;     // closedness of the difference form on the sum
  Tensor criterion_defect;  // rho^d(X)(Y) - rho^d(Y)(X) - [X,Y]
  bool direct_holds = false;
  bool criterion_holds = false;
};

// The two verdicts always match; a mismatch is an internal error.
CocycleCriterionReport symplectic_cocycle_criterion(const LieAlgebra& l,
                                                    const Representation& rho);

struct QuasiassocReport {
  Tensor defect;  // (xy)z - x(yz) - (yx)z + y(xz) over basis triples
  bool quasiassociative = false;
  Rank3 commutator;
  Tensor commutator_jacobi;
  bool commutator_is_lie = false;
};

QuasiassocReport quasiassociative_check(const BilinearProduct& m);

struct SymplecticDoubleResult {
  BilinearProduct doubled;  // product on A + A*, second factor acted on from the left
  DoubleAlgebra lie;        // its commutator, tagged as the double
};

// (a,a*)(b,b*) = (ab, a b*) with a b* = -(left multiplication)^T applied;
// the right action of A on A* is zero in this construction.  The result is
// again quasiassociative and its commutator is the semidirect-sum bracket.
SymplecticDoubleResult symplectic_double(const BilinearProduct& m);

struct OFromSymplecticReport {
  OOperator o;
  bool skew = false;
  bool o_equation_holds = false;
  AlgebraOnModule induced;
  bool matches_closed_form = false;  // (rho(a) beta - rho(b) alpha, [a,b])
  bool self_dual = false;            // induced bracket isomorphic to the sum itself
};

// The nondegenerate difference form on a semidirect sum satisfying the
// closedness criterion is inverted into the block operator
// [[0, 1], [-1, 0]]; the induced dual bracket reproduces the sum.
OFromSymplecticReport o_from_symplectic(const LieAlgebra& l, const Representation& rho);

}  // namespace omatrix

#endif
