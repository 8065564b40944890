#include "omatrix/yang_baxter.hpp"

#include <stdexcept>

namespace omatrix {

namespace {

int pair_space_dim(const Matrix& s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("operator must be square");
  int d = 0;
  while (d * d < s.rows()) ++d;
  if (d * d != s.rows())
    throw std::invalid_argument("operator dimension is not a perfect square");
  return d;
}

HSeries embed_series(const HSeries& r, Slot slot, int d) {
  return HSeries(embed_pair(r.coeff(0), slot, d), embed_pair(r.coeff(1), slot, d),
                 embed_pair(r.coeff(2), slot, d));
}

}  // namespace

YBReport check_artin(const Matrix& s) {
  int d = pair_space_dim(s);
  Matrix s12 = embed_pair(s, Slot::s12, d);
  Matrix s23 = embed_pair(s, Slot::s23, d);
  Matrix defect = s23 * s12 * s23 - s12 * s23 * s12;
  return {"artin", defect.is_zero(), defect.to_tensor()};
}

YBReport check_qybe(const Matrix& r) {
  int d = pair_space_dim(r);
  Matrix r12 = embed_pair(r, Slot::s12, d);
  Matrix r13 = embed_pair(r, Slot::s13, d);
  Matrix r23 = embed_pair(r, Slot::s23, d);
  Matrix defect = r12 * r13 * r23 - r23 * r13 * r12;
  return {"qybe", defect.is_zero(), defect.to_tensor()};
}

Matrix cybe_operator_defect(const Matrix& r, int dim_v) {
  Matrix r12 = embed_pair(r, Slot::s12, dim_v);
  Matrix r13 = embed_pair(r, Slot::s13, dim_v);
  Matrix r23 = embed_pair(r, Slot::s23, dim_v);
  return commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
}

Matrix quasiclassical_defect(const HSeries& r_series) {
  int n = r_series.dim();
  if (r_series.coeff(0) != Matrix::identity(n))
    throw std::invalid_argument("quasiclassical series must start at the identity");
  int d = pair_space_dim(r_series.coeff(0));
  HSeries r12 = embed_series(r_series, Slot::s12, d);
  HSeries r13 = embed_series(r_series, Slot::s13, d);
  HSeries r23 = embed_series(r_series, Slot::s23, d);
  HSeries diff = r12 * r13 * r23 - r23 * r13 * r12;
  if (!diff.coeff(0).is_zero() || !diff.coeff(1).is_zero())
    throw std::logic_error("quasiclassical defect: lower orders must cancel");
  Matrix h2 = diff.coeff(2);
  if (h2 != cybe_operator_defect(r_series.coeff(1), d))
    throw std::logic_error(
        "quasiclassical defect disagrees with the three-commutator sum");
  return h2;
}

YBReport check_artin_quasiclassical(const Matrix& rbar) {
  int d = pair_space_dim(rbar);
  Matrix b12 = embed_pair(rbar, Slot::s12, d);
  Matrix b23 = embed_pair(rbar, Slot::s23, d);
  Matrix p12 = embed_pair(permutation_operator(d), Slot::s12, d);
  Matrix p23 = embed_pair(permutation_operator(d), Slot::s23, d);
  Matrix lhs = b23 * b12 * p23 + b23 * p12 * b23 + p23 * b12 * b23;
  Matrix rhs = b12 * b23 * p12 + b12 * p23 * b12 + p12 * b23 * b12;
  Matrix defect = lhs - rhs;
  return {"artin-quasiclassical", defect.is_zero(), defect.to_tensor()};
}

UnitarityReport unitarity_implies_skewness(const HSeries& s) {
  int d = pair_space_dim(s.coeff(0));
  Matrix p = permutation_operator(d);
  if (s.coeff(0) != p)
    throw std::invalid_argument("series must start at the permutation operator");
  UnitarityReport rep;
  HSeries sq = s * s;
  rep.hypothesis = sq.coeff(0) == Matrix::identity(d * d) && sq.coeff(1).is_zero();
  rep.r = p * s.coeff(1);
  rep.conclusion = (p * rep.r) == -(rep.r * p);
  if (rep.hypothesis && !rep.conclusion)
    throw std::logic_error("unitarity held but skewness failed");
  return rep;
}

}  // namespace omatrix
