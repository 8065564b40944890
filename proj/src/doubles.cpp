#include "omatrix/doubles.hpp"

#include <stdexcept>

namespace omatrix {

BilinearProduct BilinearProduct::matrix_units(int n) {
  // Basis E_{ab} flattened as a*n+b; E_{ab} E_{cd} = delta_{bc} E_{ad}.
  BilinearProduct p{n * n, Rank3(n * n, n * n, n * n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) p.m.at(a * n + b, b * n + d, a * n + d) = 1;
  return p;
}

std::vector<Rational> BilinearProduct::mul(const std::vector<Rational>& a,
                                           const std::vector<Rational>& b) const {
  if (static_cast<int>(a.size()) != dim || static_cast<int>(b.size()) != dim)
    throw std::invalid_argument("product operand dimension mismatch");
  std::vector<Rational> out(dim, Rational(0));
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      for (int k = 0; k < dim; ++k)
        if (m.at(i, j, k) != 0) out[k] += a[i] * b[j] * m.at(i, j, k);
    }
  }
  return out;
}

Rank3 BilinearProduct::commutator_tensor() const {
  Rank3 c(dim, dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) c.at(i, j, k) = m.at(i, j, k) - m.at(j, i, k);
  return c;
}

CrossedReport crossed_bracket(const LieAlgebra& l, const Rank3& dual_bracket) {
  int n = l.dim();
  if (dual_bracket.d0 != n || dual_bracket.d1 != n || dual_bracket.d2 != n)
    throw std::invalid_argument("dual bracket tensor shape mismatch");
  if (!bracket_is_skew(dual_bracket))
    throw std::invalid_argument("dual bracket must be antisymmetric");
  const Rank3& c = l.c();
  const Rank3& d = dual_bracket;
  Rank3 big(2 * n, 2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // [e_i, e_j] = ([e_i,e_j], 0)
        big.at(i, j, k) = c.at(i, j, k);
        // [e_i, e^b]: algebra part d_{bk}^i, dual part -c_{is}^b
        big.at(i, n + j, k) = d.at(j, k, i);
        big.at(i, n + j, n + k) = -c.at(i, k, j);
        big.at(n + j, i, k) = -d.at(j, k, i);
        big.at(n + j, i, n + k) = c.at(i, k, j);
        // [e^a, e^b] = (0, [e^a,e^b])
        big.at(n + i, n + j, n + k) = d.at(i, j, k);
      }

  CrossedReport rep;
  rep.d = DoubleAlgebra{DoubleAlgebra::Kind::crossed, n, big};
  rep.direct_jacobi = bracket_jacobi_defect(big);
  rep.direct_holds = rep.direct_jacobi.is_zero();

  // Pairing of the mixed trilinear identity against the dual basis:
  //   <v, [u.Y, Z] - [u.Z, Y] + (Z.u).Y - (Y.u).Z - u.[Y,Z]>
  // with u = e^a, v = e^b, Y = e_i, Z = e_j and both coadjoint actions
  // written through structure constants.
  Tensor quad({n, n, n, n});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Rational sum(0);
          for (int s = 0; s < n; ++s) {
            sum += d.at(a, b, s) * c.at(i, j, s);
            sum += c.at(j, s, b) * d.at(a, s, i);
            sum += c.at(i, s, a) * d.at(b, s, j);
            sum -= c.at(i, s, b) * d.at(a, s, j);
            sum -= c.at(j, s, a) * d.at(b, s, i);
          }
          if (sum != 0) quad.set({a, b, i, j}, sum);
        }
  rep.quadrilinear = quad;
  rep.quadrilinear_holds = quad.is_zero();

  // Ad-invariance of the sum pairing <u,Y> + <v,X> on basis triples.
  Matrix pairing(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    pairing(i, n + i) = 1;
    pairing(n + i, i) = 1;
  }
  rep.pairing_ad_invariant = true;
  for (int p = 0; p < 2 * n && rep.pairing_ad_invariant; ++p)
    for (int q = 0; q < 2 * n && rep.pairing_ad_invariant; ++q)
      for (int t = 0; t < 2 * n; ++t) {
        Rational lhs(0), rhs(0);
        for (int s = 0; s < 2 * n; ++s) {
          lhs += big.at(p, q, s) * pairing(s, t);
          rhs += big.at(q, t, s) * pairing(p, s);
        }
        if (lhs != rhs) {
          rep.pairing_ad_invariant = false;
          break;
        }
      }
  return rep;
}

CrossedCocycleReport symplectic_cocycle_on_crossed(const DoubleAlgebra& d) {
  if (d.kind != DoubleAlgebra::Kind::crossed)
    throw std::invalid_argument("expected a crossed double");
  int n = d.half_dim;
  int n2 = 2 * n;
  Matrix w(n2, n2);
  for (int i = 0; i < n; ++i) {
    w(i, n + i) = -1;  // omega(e_i, e^i) = -<e^i, e_i>
    w(n + i, i) = 1;
  }
  Tensor defect({n2, n2, n2});
  for (int p = 0; p < n2; ++p)
    for (int q = 0; q < n2; ++q)
      for (int t = 0; t < n2; ++t) {
        Rational sum(0);
        for (int s = 0; s < n2; ++s) {
          sum += d.bracket.at(p, q, s) * w(s, t);
          sum += d.bracket.at(q, t, s) * w(s, p);
          sum += d.bracket.at(t, p, s) * w(s, q);
        }
        if (sum != 0) defect.set({p, q, t}, sum);
      }
  CrossedCocycleReport rep;
  rep.defect = defect;
  rep.holds = defect.is_zero();
  rep.algebra_abelian = true;
  rep.dual_abelian = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (d.bracket.at(i, j, k) != 0) rep.algebra_abelian = false;
        if (d.bracket.at(n + i, n + j, n + k) != 0) rep.dual_abelian = false;
      }
  if (rep.holds != (rep.algebra_abelian && rep.dual_abelian))
    throw std::logic_error("closedness of the difference form must match double abelianness");
  return rep;
}

DoubleAlgebra semidirect_sum(const LieAlgebra& l, const Representation& rho) {
  if (!bracket_jacobi_defect(l.c()).is_zero())
    throw std::invalid_argument("semidirect sum requires a Lie structure");
  int n = l.dim();
  if (rho.dim_v() != n)
    throw std::invalid_argument("the module of a semidirect sum has the dual's dimension");
  if (!(rho.algebra().c() == l.c()))
    throw std::invalid_argument("module over a different algebra");
  if (!rho.is_valid()) throw std::invalid_argument("invalid module structure");
  Rank3 big(2 * n, 2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        big.at(i, j, k) = l.c().at(i, j, k);
        big.at(i, n + j, n + k) = rho.chi().at(i, j, k);
        big.at(n + j, i, n + k) = -rho.chi().at(i, j, k);
      }
  if (!bracket_jacobi_defect(big).is_zero())
    throw std::logic_error("a semidirect sum along a module is always a Lie algebra");
  return DoubleAlgebra{DoubleAlgebra::Kind::semidirect, n, std::move(big)};
}

CocycleCriterionReport symplectic_cocycle_criterion(const LieAlgebra& l,
                                                    const Representation& rho) {
  int n = l.dim();
  DoubleAlgebra d = semidirect_sum(l, rho);
  int n2 = 2 * n;
  Matrix w(n2, n2);
  for (int i = 0; i < n; ++i) {
    w(i, n + i) = -1;
    w(n + i, i) = 1;
  }
  CocycleCriterionReport rep;
  Tensor direct({n2, n2, n2});
  for (int p = 0; p < n2; ++p)
    for (int q = 0; q < n2; ++q)
      for (int t = 0; t < n2; ++t) {
        Rational sum(0);
        for (int s = 0; s < n2; ++s) {
          sum += d.bracket.at(p, q, s) * w(s, t);
          sum += d.bracket.at(q, t, s) * w(s, p);
          sum += d.bracket.at(t, p, s) * w(s, q);
        }
        if (sum != 0) direct.set({p, q, t}, sum);
      }
  rep.direct_defect = direct;
  rep.direct_holds = direct.is_zero();

  Tensor crit({n, n, n});
  for (int i = 0; i < n; ++i) {
    Matrix rd_i = -rho.matrix_of(i).transpose();
    for (int j = 0; j < n; ++j) {
      Matrix rd_j = -rho.matrix_of(j).transpose();
      for (int k = 0; k < n; ++k) {
        Rational v = rd_i(k, j) - rd_j(k, i) - l.c().at(i, j, k);
        if (v != 0) crit.set({i, j, k}, v);
      }
    }
  }
  rep.criterion_defect = crit;
  rep.criterion_holds = crit.is_zero();
  if (rep.direct_holds != rep.criterion_holds)
    throw std::logic_error("dual-representation criterion must match the direct computation");
  return rep;
}

QuasiassocReport quasiassociative_check(const BilinearProduct& p) {
  int n = p.dim;
  QuasiassocReport rep;
  Tensor defect({n, n, n, n});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cidx = 0; cidx < n; ++cidx) {
        std::vector<Rational> ea(n, Rational(0)), eb(n, Rational(0)), ec(n, Rational(0));
        ea[a] = 1;
        eb[b] = 1;
        ec[cidx] = 1;
        auto ab_c = p.mul(p.mul(ea, eb), ec);
        auto a_bc = p.mul(ea, p.mul(eb, ec));
        auto ba_c = p.mul(p.mul(eb, ea), ec);
        auto b_ac = p.mul(eb, p.mul(ea, ec));
        for (int k = 0; k < n; ++k) {
          Rational v = ab_c[k] - a_bc[k] - ba_c[k] + b_ac[k];
          if (v != 0) defect.set({a, b, cidx, k}, v);
        }
      }
  rep.defect = defect;
  rep.quasiassociative = defect.is_zero();
  rep.commutator = p.commutator_tensor();
  rep.commutator_jacobi = bracket_jacobi_defect(rep.commutator);
  rep.commutator_is_lie = rep.commutator_jacobi.is_zero();
  if (rep.quasiassociative && !rep.commutator_is_lie)
    throw std::logic_error("the commutator of a quasiassociative product must satisfy Jacobi");
  return rep;
}

SymplecticDoubleResult symplectic_double(const BilinearProduct& p) {
  QuasiassocReport base = quasiassociative_check(p);
  if (!base.quasiassociative)
    throw std::invalid_argument("the double needs a quasiassociative product");
  int n = p.dim;
  BilinearProduct doubled{2 * n, Rank3(2 * n, 2 * n, 2 * n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        doubled.m.at(i, j, k) = p.m.at(i, j, k);
        // e_i f^j = -(left multiplication by e_i)^T: component k is -m(i,k,j).
        doubled.m.at(i, n + j, n + k) = -p.m.at(i, k, j);
      }
  QuasiassocReport check = quasiassociative_check(doubled);
  if (!check.quasiassociative)
    throw std::logic_error("the double of a quasiassociative product must be quasiassociative");

  // Its commutator is the semidirect sum along the left action.
  LieAlgebra base_lie = LieAlgebra::from_structure(base.commutator);
  Rank3 chi(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) chi.at(i, b, k) = -p.m.at(i, k, b);
  Representation rho(base_lie, n, std::move(chi));
  DoubleAlgebra sum = semidirect_sum(base_lie, rho);
  if (!(check.commutator == sum.bracket))
    throw std::logic_error("commutator of the double must be the semidirect-sum bracket");
  return SymplecticDoubleResult{std::move(doubled),
                                DoubleAlgebra{DoubleAlgebra::Kind::symplectic_double, n,
                                              std::move(sum.bracket)}};
}

OFromSymplecticReport o_from_symplectic(const LieAlgebra& l, const Representation& rho) {
  CocycleCriterionReport crit = symplectic_cocycle_criterion(l, rho);
  if (!crit.criterion_holds)
    throw std::invalid_argument("difference form is not closed on this sum");
  int n = l.dim();
  DoubleAlgebra d = semidirect_sum(l, rho);
  LieAlgebra big = LieAlgebra::from_structure(d.bracket);
  Tensor r({2 * n, 2 * n});
  for (int i = 0; i < n; ++i) {
    r.set({i, n + i}, Rational(1));
    r.set({n + i, i}, Rational(-1));
  }
  OFromSymplecticReport rep{r_to_operator(big, r), false, false, AlgebraOnModule{}, false, false};
  rep.skew = rep.o.is_skew();
  rep.o_equation_holds = o_equation_defect(rep.o).is_zero();
  if (!rep.o_equation_holds)
    throw std::logic_error("the block operator of a closed form must satisfy its equation");
  rep.induced = induced_bracket(rep.o);

  // Closed form of the induced bracket: ((rho(a) beta - rho(b) alpha, [a,b]).
  Rank3 expected(2 * n, 2 * n, 2 * n);
  for (int pidx = 0; pidx < n; ++pidx)
    for (int q = 0; q < n; ++q)
      for (int k = 0; k < n; ++k) {
        expected.at(n + pidx, n + q, n + k) = l.c().at(pidx, q, k);
        expected.at(n + pidx, q, k) = rho.chi().at(pidx, q, k);
        expected.at(q, n + pidx, k) = -rho.chi().at(pidx, q, k);
      }
  rep.matches_closed_form = rep.induced.bracket == expected;

  // Self-duality: the operator itself transports the induced bracket onto
  // the sum's own bracket.
  Matrix phi = rep.o.m;
  rep.self_dual = true;
  for (int pidx = 0; pidx < 2 * n && rep.self_dual; ++pidx)
    for (int q = 0; q < 2 * n; ++q) {
      std::vector<Rational> br(2 * n);
      for (int k = 0; k < 2 * n; ++k) br[k] = rep.induced.bracket.at(pidx, q, k);
      std::vector<Rational> lhs = phi.apply(br);
      std::vector<Rational> cp(2 * n), cq(2 * n);
      for (int k = 0; k < 2 * n; ++k) {
        cp[k] = phi(k, pidx);
        cq[k] = phi(k, q);
      }
      std::vector<Rational> rhs = big.bracket(cp, cq);
      if (lhs != rhs) {
        rep.self_dual = false;
        break;
      }
    }
  if (!rep.matches_closed_form || !rep.self_dual)
    throw std::logic_error("induced dual bracket must reproduce the sum");
  return rep;
}

}  // namespace omatrix
