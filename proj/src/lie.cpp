#include "omatrix/lie.hpp"

#include <stdexcept>

namespace omatrix {

Tensor Rank3::to_tensor() const {
  Tensor t({d0, d1, d2});
  for (int i = 0; i < d0; ++i)
    for (int j = 0; j < d1; ++j)
      for (int k = 0; k < d2; ++k)
        if (at(i, j, k) != 0) t.set({i, j, k}, at(i, j, k));
  return t;
}

bool bracket_is_skew(const Rank3& c) {
  if (c.d0 != c.d1) return false;
  for (int i = 0; i < c.d0; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < c.d2; ++k)
        if (c.at(i, j, k) != -c.at(j, i, k)) return false;
  return true;
}

Tensor bracket_jacobi_defect(const Rank3& c) {
  int n = c.d0;
  Tensor defect({n, n, n, c.d2});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int t = 0; t < c.d2; ++t) {
          Rational sum(0);
          for (int s = 0; s < n; ++s) {
            // [[e_i, e_j], e_k] + [[e_j, e_k], e_i] + [[e_k, e_i], e_j]
            sum += c.at(i, j, s) * c.at(s, k, t);
            sum += c.at(j, k, s) * c.at(s, i, t);
            sum += c.at(k, i, s) * c.at(s, j, t);
          }
          if (sum != 0) defect.set({i, j, k, t}, sum);
        }
  return defect;
}

LieAlgebra LieAlgebra::from_structure(Rank3 c, std::vector<std::string> names,
                                      bool defer_jacobi) {
  int n = c.d0;
  if (c.d1 != n || c.d2 != n) throw std::invalid_argument("structure tensor must be cubic");
  if (!bracket_is_skew(c)) throw std::invalid_argument("structure constants are not skew");
  if (names.empty())
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  if (static_cast<int>(names.size()) != n)
    throw std::invalid_argument("basis name count mismatch");
  if (!defer_jacobi && !bracket_jacobi_defect(c).is_zero())
    throw std::invalid_argument("structure constants fail the Jacobi identity");
  return LieAlgebra(n, std::move(c), std::move(names));
}

LieAlgebra LieAlgebra::abelian(int n) { return from_structure(Rank3(n, n, n)); }

LieAlgebra LieAlgebra::sl2() {
  Rank3 c(3, 3, 3);
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h with basis order (h, e, f).
  c.at(0, 1, 1) = 2;
  c.at(1, 0, 1) = -2;
  c.at(0, 2, 2) = -2;
  c.at(2, 0, 2) = 2;
  c.at(1, 2, 0) = 1;
  c.at(2, 1, 0) = -1;
  return from_structure(std::move(c), {"h", "e", "f"});
}

LieAlgebra LieAlgebra::borel2() {
  Rank3 c(2, 2, 2);
  c.at(0, 1, 1) = 2;
  c.at(1, 0, 1) = -2;
  return from_structure(std::move(c), {"h", "e"});
}

LieAlgebra LieAlgebra::gl2() {
  // Basis E11, E12, E21, E22; [E_ab, E_cd] = d_bc E_ad - d_da E_cb.
  auto idx = [](int a, int b) { return 2 * a + b; };
  Rank3 c(4, 4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int e = 0; e < 2; ++e)
        for (int d = 0; d < 2; ++d) {
          if (b == e) c.at(idx(a, b), idx(e, d), idx(a, d)) += 1;
          if (d == a) c.at(idx(a, b), idx(e, d), idx(e, b)) -= 1;
        }
  return from_structure(std::move(c), {"E11", "E12", "E21", "E22"});
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x,
                                          const std::vector<Rational>& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("bracket operand dimension mismatch");
  std::vector<Rational> out(dim_, Rational(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      for (int k = 0; k < dim_; ++k)
        if (c_.at(i, j, k) != 0) out[k] += x[i] * y[j] * c_.at(i, j, k);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(int i) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m(k, j) = c_.at(i, j, k);
  return m;
}

YBReport jacobi_check(const LieAlgebra& l) {
  Tensor defect = bracket_jacobi_defect(l.c());
  return {"jacobi", defect.is_zero(), defect};
}

Representation::Representation(LieAlgebra algebra, int dim_v, Rank3 chi)
    : algebra_(std::move(algebra)), dim_v_(dim_v), chi_(std::move(chi)) {
  if (dim_v < 1) throw std::invalid_argument("module dimension must be positive");
  if (chi_.d0 != algebra_.dim() || chi_.d1 != dim_v || chi_.d2 != dim_v)
    throw std::invalid_argument("representation tensor shape mismatch");
}

Representation Representation::coadjoint(const LieAlgebra& l) {
  if (!bracket_jacobi_defect(l.c()).is_zero())
    throw std::invalid_argument("coadjoint module requires the triple identity");
  int n = l.dim();
  Rank3 chi(n, n, n);
  // e_i . e^a = - sum_s c_{is}^a e^s
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int s = 0; s < n; ++s) chi.at(i, a, s) = -l.c().at(i, s, a);
  return Representation(l, n, std::move(chi));
}

Representation Representation::trivial(const LieAlgebra& l, int dim_v) {
  return Representation(l, dim_v, Rank3(l.dim(), dim_v, dim_v));
}

Representation Representation::sl2_fundamental(const LieAlgebra& sl2) {
  if (sl2.dim() != 3) throw std::invalid_argument("fundamental module needs the rank-1 fixture");
  Rank3 chi(3, 2, 2);
  chi.at(0, 0, 0) = 1;   // h.v0 = v0
  chi.at(0, 1, 1) = -1;  // h.v1 = -v1
  chi.at(1, 1, 0) = 1;   // e.v1 = v0
  chi.at(2, 0, 1) = 1;   // f.v0 = v1
  return Representation(sl2, 2, std::move(chi));
}

Representation Representation::from_matrices(const LieAlgebra& l,
                                             const std::vector<Matrix>& mats) {
  if (static_cast<int>(mats.size()) != l.dim())
    throw std::invalid_argument("one action matrix per basis element required");
  int dv = mats.empty() ? 0 : mats[0].rows();
  Rank3 chi(l.dim(), dv, dv);
  for (int i = 0; i < l.dim(); ++i) {
    if (mats[i].rows() != dv || mats[i].cols() != dv)
      throw std::invalid_argument("action matrices must be square of one shape");
    for (int a = 0; a < dv; ++a)
      for (int g = 0; g < dv; ++g) chi.at(i, a, g) = mats[i](g, a);
  }
  return Representation(l, dv, std::move(chi));
}

Matrix Representation::matrix_of(int i) const {
  Matrix m(dim_v_, dim_v_);
  for (int a = 0; a < dim_v_; ++a)
    for (int g = 0; g < dim_v_; ++g) m(g, a) = chi_.at(i, a, g);
  return m;
}

std::vector<Rational> Representation::act(const std::vector<Rational>& x,
                                          const std::vector<Rational>& v) const {
  if (static_cast<int>(x.size()) != algebra_.dim() ||
      static_cast<int>(v.size()) != dim_v_)
    throw std::invalid_argument("action operand dimension mismatch");
  std::vector<Rational> out(dim_v_, Rational(0));
  for (int i = 0; i < algebra_.dim(); ++i) {
    if (x[i] == 0) continue;
    for (int a = 0; a < dim_v_; ++a) {
      if (v[a] == 0) continue;
      for (int g = 0; g < dim_v_; ++g)
        if (chi_.at(i, a, g) != 0) out[g] += x[i] * v[a] * chi_.at(i, a, g);
    }
  }
  return out;
}

Tensor Representation::defect() const {
  int n = algebra_.dim();
  Tensor out({n, n, dim_v_, dim_v_});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix lhs(dim_v_, dim_v_);
      for (int k = 0; k < n; ++k)
        if (algebra_.c().at(i, j, k) != 0)
          lhs = lhs + matrix_of(k).scaled(algebra_.c().at(i, j, k));
      Matrix diff = lhs - commutator(matrix_of(i), matrix_of(j));
      for (int a = 0; a < dim_v_; ++a)
        for (int b = 0; b < dim_v_; ++b)
          if (diff(a, b) != 0) out.set({i, j, a, b}, diff(a, b));
    }
  return out;
}

Representation Representation::dual() const {
  Rank3 chi_d(algebra_.dim(), dim_v_, dim_v_);
  for (int i = 0; i < algebra_.dim(); ++i)
    for (int a = 0; a < dim_v_; ++a)
      for (int g = 0; g < dim_v_; ++g) chi_d.at(i, a, g) = -chi_.at(i, g, a);
  return Representation(algebra_, dim_v_, std::move(chi_d));
}

Representation Representation::direct_sum(const Representation& o) const {
  if (algebra_.dim() != o.algebra_.dim())
    throw std::invalid_argument("direct sum needs a common algebra");
  int dv = dim_v_ + o.dim_v_;
  Rank3 chi(algebra_.dim(), dv, dv);
  for (int i = 0; i < algebra_.dim(); ++i) {
    for (int a = 0; a < dim_v_; ++a)
      for (int g = 0; g < dim_v_; ++g) chi.at(i, a, g) = chi_.at(i, a, g);
    for (int a = 0; a < o.dim_v_; ++a)
      for (int g = 0; g < o.dim_v_; ++g)
        chi.at(i, dim_v_ + a, dim_v_ + g) = o.chi_.at(i, a, g);
  }
  return Representation(algebra_, dv, std::move(chi));
}

OOperator r_to_operator(const LieAlgebra& l, const Tensor& r) {
  int n = l.dim();
  if (r.shape() != std::vector<int>{n, n})
    throw std::invalid_argument("coefficient array shape must match the algebra dimension");
  // O(e^i) = sum_s e_s r^{si}
  Matrix m = Matrix::from_tensor(r);
  return OOperator{Representation::coadjoint(l), l, m};
}

Tensor operator_to_r(const OOperator& o) {
  if (o.m.rows() != o.m.cols() || o.m.rows() != o.target.dim())
    throw std::invalid_argument("operator is not a square map on the dual");
  return o.m.to_tensor();
}

Tensor cybe_defect(const LieAlgebra& l, const Tensor& r) {
  int n = l.dim();
  if (r.shape() != std::vector<int>{n, n})
    throw std::invalid_argument("coefficient array shape mismatch");
  Matrix rm = Matrix::from_tensor(r);
  if (!rm.is_skew())
    throw std::invalid_argument("only skew coefficient arrays are accepted here");
  Tensor out({n, n, n});
  const Rank3& c = l.c();
  for (const auto& [ij, rij] : r.entries())
    for (const auto& [kl, rkl] : r.entries()) {
      int i = ij[0], j = ij[1], k = kl[0], w = kl[1];
      Rational coef = rij * rkl;
      for (int s = 0; s < n; ++s) {
        if (c.at(i, k, s) != 0) out.add_at({s, j, w}, coef * c.at(i, k, s));
        if (c.at(j, k, s) != 0) out.add_at({i, s, w}, coef * c.at(j, k, s));
        if (c.at(j, w, s) != 0) out.add_at({i, k, s}, coef * c.at(j, w, s));
      }
    }
  return out;
}

Tensor o_equation_defect(const OOperator& o) {
  const Representation& u = o.source;
  int du = u.dim_v();
  int n = o.target.dim();
  if (o.m.rows() != n || o.m.cols() != du)
    throw std::invalid_argument("operator matrix shape mismatch");
  if (!(u.algebra().c() == o.target.c()))
    throw std::invalid_argument("module and target algebra differ");
  if (!u.is_valid()) throw std::invalid_argument("source is not a valid module");
  Tensor out({du, du, n});
  for (int a = 0; a < du; ++a)
    for (int b = 0; b < du; ++b) {
      std::vector<Rational> ea(du, Rational(0)), eb(du, Rational(0));
      ea[a] = 1;
      eb[b] = 1;
      std::vector<Rational> xa(n), xb(n);
      for (int k = 0; k < n; ++k) {
        xa[k] = o.m(k, a);
        xb[k] = o.m(k, b);
      }
      std::vector<Rational> w = u.act(xa, eb);
      std::vector<Rational> w2 = u.act(xb, ea);
      for (int k = 0; k < du; ++k) w[k] -= w2[k];
      std::vector<Rational> lhs = o.m.apply(w);
      std::vector<Rational> rhs = o.target.bracket(xa, xb);
      for (int k = 0; k < n; ++k)
        if (lhs[k] != rhs[k]) out.set({a, b, k}, lhs[k] - rhs[k]);
    }
  return out;
}

AlgebraOnModule induced_bracket(const OOperator& o) {
  if (!o_equation_defect(o).is_zero())
    throw std::invalid_argument("operator fails its defining equation; no bracket induced");
  const Representation& u = o.source;
  int du = u.dim_v();
  Rank3 m(du, du, du);
  for (int a = 0; a < du; ++a)
    for (int b = 0; b < du; ++b) {
      std::vector<Rational> ea(du, Rational(0)), eb(du, Rational(0));
      ea[a] = 1;
      eb[b] = 1;
      std::vector<Rational> xa(o.target.dim()), xb(o.target.dim());
      for (int k = 0; k < o.target.dim(); ++k) {
        xa[k] = o.m(k, a);
        xb[k] = o.m(k, b);
      }
      std::vector<Rational> w = u.act(xa, eb);
      std::vector<Rational> w2 = u.act(xb, ea);
      for (int k = 0; k < du; ++k) m.at(a, b, k) = w[k] - w2[k];
    }
  if (!bracket_jacobi_defect(m).is_zero())
    throw std::logic_error("induced bracket must satisfy Jacobi once the defect vanishes");
  return AlgebraOnModule{du, std::move(m)};
}

YBReport induced_cocycle_check(const OOperator& o) {
  if (o.m.rows() != o.m.cols() || o.m.rows() != o.target.dim())
    throw std::invalid_argument("cocycle check needs an operator on the dual");
  if (!o.is_skew()) throw std::invalid_argument("cocycle check needs a skew operator");
  AlgebraOnModule dual = induced_bracket(o);
  int n = dual.dim;
  Tensor defect({n, n, n});
  // Omega(e^s, e^c) = <e^s, O(e^c)> = m(s, c)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc) {
        Rational sum(0);
        for (int s = 0; s < n; ++s) {
          sum += dual.bracket.at(a, b, s) * o.m(s, cc);
          sum += dual.bracket.at(b, cc, s) * o.m(s, a);
          sum += dual.bracket.at(cc, a, s) * o.m(s, b);
        }
        if (sum != 0) defect.set({a, b, cc}, sum);
      }
  return {"dual-cocycle", defect.is_zero(), defect};
}

DrinfeldReport drinfeld_equivalence(const LieAlgebra& l, const Tensor& r) {
  int n = l.dim();
  OOperator o = r_to_operator(l, r);
  if (!o.is_skew()) throw std::invalid_argument("only skew coefficient arrays are accepted");
  auto inv = o.m.inverse();
  if (!inv)
    throw std::invalid_argument(
        "degenerate coefficient array: the pairing-form route requires invertibility");
  DrinfeldReport rep;
  rep.omega = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rep.omega(i, j) = (*inv)(j, i);
  Tensor cdef({n, n, n});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational sum(0);
        for (int s = 0; s < n; ++s) {
          sum += l.c().at(j, k, s) * rep.omega(i, s);
          sum += l.c().at(k, i, s) * rep.omega(j, s);
          sum += l.c().at(i, j, s) * rep.omega(k, s);
        }
        if (sum != 0) cdef.set({i, j, k}, sum);
      }
  rep.cocycle_defect = cdef;
  rep.o_defect = o_equation_defect(o);
  rep.cybe = cybe_defect(l, r);
  rep.cocycle_holds = cdef.is_zero();
  rep.cybe_holds = rep.cybe.is_zero();
  rep.equivalence_agrees = rep.cocycle_holds == rep.cybe_holds;

  // Pairing identity: <w, [O(u),O(v)] - O(O(u).v - O(v).u)> matches the
  // three-commutator tensor entry by entry, solutions or not.
  rep.pairing_identity_holds = true;
  for (int a = 0; a < n && rep.pairing_identity_holds; ++a)
    for (int b = 0; b < n && rep.pairing_identity_holds; ++b)
      for (int cc = 0; cc < n; ++cc)
        if (-rep.o_defect.at({a, b, cc}) != rep.cybe.at({a, b, cc})) {
          rep.pairing_identity_holds = false;
          break;
        }
  if (!rep.pairing_identity_holds)
    throw std::logic_error("pairing identity between the two defects failed");
  if (!rep.equivalence_agrees)
    throw std::logic_error("cocycle and three-commutator verdicts disagree");
  return rep;
}

bool is_homomorphism(const Matrix& phi, const LieAlgebra& g, const LieAlgebra& h) {
  if (phi.rows() != h.dim() || phi.cols() != g.dim()) return false;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      std::vector<Rational> br(g.dim(), Rational(0));
      for (int k = 0; k < g.dim(); ++k) br[k] = g.c().at(i, j, k);
      std::vector<Rational> lhs = phi.apply(br);
      std::vector<Rational> xi(g.dim(), Rational(0)), xj(g.dim(), Rational(0));
      xi[i] = 1;
      xj[j] = 1;
      std::vector<Rational> rhs = h.bracket(phi.apply(xi), phi.apply(xj));
      if (lhs != rhs) return false;
    }
  return true;
}

PushForwardReport push_forward(const Matrix& phi, const LieAlgebra& g, const LieAlgebra& h,
                               const OOperator& o_g) {
  if (!is_homomorphism(phi, g, h))
    throw std::invalid_argument("push-forward along a non-homomorphism refused");
  if (o_g.m.rows() != g.dim() || o_g.m.cols() != g.dim())
    throw std::invalid_argument("push-forward needs an operator on the source dual");
  PushForwardReport rep{OOperator{Representation::coadjoint(h), h, phi * o_g.m * phi.transpose()},
                        false, false, false};
  rep.o_equation_holds = o_equation_defect(rep.pushed).is_zero();

  Representation coad_g = Representation::coadjoint(g);
  Representation coad_h = Representation::coadjoint(h);
  Matrix phit = phi.transpose();
  rep.intertwining_holds = true;
  for (int i = 0; i < g.dim() && rep.intertwining_holds; ++i)
    for (int a = 0; a < h.dim(); ++a) {
      std::vector<Rational> xi(g.dim(), Rational(0));
      xi[i] = 1;
      std::vector<Rational> fa(h.dim(), Rational(0));
      fa[a] = 1;
      std::vector<Rational> lhs = phit.apply(coad_h.act(phi.apply(xi), fa));
      std::vector<Rational> rhs = coad_g.act(xi, phit.apply(fa));
      if (lhs != rhs) {
        rep.intertwining_holds = false;
        break;
      }
    }

  if (rep.o_equation_holds && o_equation_defect(o_g).is_zero()) {
    AlgebraOnModule mh = induced_bracket(rep.pushed);
    AlgebraOnModule mg = induced_bracket(o_g);
    rep.dual_homomorphism_holds = true;
    for (int a = 0; a < h.dim() && rep.dual_homomorphism_holds; ++a)
      for (int b = 0; b < h.dim(); ++b) {
        std::vector<Rational> br(h.dim());
        for (int k = 0; k < h.dim(); ++k) br[k] = mh.bracket.at(a, b, k);
        std::vector<Rational> lhs = phit.apply(br);
        std::vector<Rational> wa(g.dim()), wb(g.dim());
        for (int s = 0; s < g.dim(); ++s) {
          wa[s] = phi(a, s);
          wb[s] = phi(b, s);
        }
        std::vector<Rational> rhs(g.dim(), Rational(0));
        for (int s = 0; s < g.dim(); ++s) {
          if (wa[s] == 0) continue;
          for (int t = 0; t < g.dim(); ++t) {
            if (wb[t] == 0) continue;
            for (int k = 0; k < g.dim(); ++k)
              if (mg.bracket.at(s, t, k) != 0) rhs[k] += wa[s] * wb[t] * mg.bracket.at(s, t, k);
          }
        }
        if (lhs != rhs) {
          rep.dual_homomorphism_holds = false;
          break;
        }
      }
  }
  return rep;
}

}  // namespace omatrix
