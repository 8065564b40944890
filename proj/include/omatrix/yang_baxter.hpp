#ifndef OMATRIX_YANG_BAXTER_HPP
#define OMATRIX_YANG_BAXTER_HPP

#include <string>

#include "omatrix/embed.hpp"
#include "omatrix/hseries.hpp"

namespace omatrix {

/// Outcome of a relation check.  The defect is returned whole (not just a
/// boolean) so that reports can show witnesses for broken sign conventions.
struct YBReport {
  std::string relation;
  bool holds = false;
  Tensor defect;
};

// Braid relation S23 S12 S23 = S12 S23 S12 for an operator on V (x) V.
YBReport check_artin(const Matrix& s);

// R12 R13 R23 = R23 R13 R12.
YBReport check_qybe(const Matrix& r);

// Three-commutator sum [r12,r13] + [r12,r23] + [r13,r23] on the triple
// tensor space, as a matrix acting there.
Matrix cybe_operator_defect(const Matrix& r, int dim_v);

/// The h^2 coefficient of R12 R13 R23 - R23 R13 R12 for R = 1 + h r + h^2 rho.
/// The result equals the three-commutator sum of the h coefficient and does
/// not depend on rho; both facts are asserted internally.
Matrix quasiclassical_defect(const HSeries& r_series);

// Defect of the order-h^2 braid relation for S = P + h rbar + ...:
//   rbar23 rbar12 P23 + rbar23 P12 rbar23 + P23 rbar12 rbar23
//   - rbar12 rbar23 P12 - rbar12 P23 rbar12 - P12 rbar23 rbar12.
YBReport check_artin_quasiclassical(const Matrix& rbar);

struct UnitarityReport {
  bool hypothesis = false;  // S^2 = 1 through order h
  bool conclusion = false;  // P r = -r P for r = P S1
  Matrix r;
};

// For S = P + h S1 + h^2 S2 with unitarity through order h, the first-order
// matrix r = P S1 is skew against P.
UnitarityReport unitarity_implies_skewness(const HSeries& s);

}  // namespace omatrix

#endif
