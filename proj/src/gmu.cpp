#include "omatrix/gmu.hpp"

#include <stdexcept>

namespace omatrix {

namespace {

DiffPoly dd(const DiffPoly& f, int n = 1) { return f.total_derivative(n); }

// Coefficient operator of a symbol the expression is linear in.
DiffOp extract_operator(const DiffPoly& expr, Sym s) {
  DiffOp out;
  for (int n = 0; n <= expr.max_order_of(s); ++n) {
    DiffPoly c = expr.partial(s, n);
    for (Sym t : c.symbols())
      if (t == s) throw std::logic_error("expression is not linear in the test symbol");
    out.add(n, c);
  }
  return out;
}

}  // namespace

DiffPair gmu_bracket(const Rational& mu, const DiffPair& a, const DiffPair& b) {
  const DiffPoly& x = a.first;
  const DiffPoly& f = a.second;
  const DiffPoly& y = b.first;
  const DiffPoly& g = b.second;
  DiffPoly top = x * dd(y) - dd(x) * y;
  DiffPoly inner = x * g - y * f + (dd(x) * dd(y, 2) - dd(x, 2) * dd(y)).scaled(mu);
  return {top, dd(inner)};
}

DiffPair gmu_jacobi_defect(const Rational& mu) {
  DiffPair a{DiffPoly::var("X"), DiffPoly::var("f")};
  DiffPair b{DiffPoly::var("Y"), DiffPoly::var("g")};
  DiffPair c{DiffPoly::var("Z"), DiffPoly::var("h")};
  auto term = [&](const DiffPair& p, const DiffPair& q, const DiffPair& r) {
    return gmu_bracket(mu, gmu_bracket(mu, p, q), r);
  };
  DiffPair t1 = term(a, b, c), t2 = term(b, c, a), t3 = term(c, a, b);
  return {t1.first + t2.first + t3.first, t1.second + t2.second + t3.second};
}

DiffPoly gmu_omega_skew_defect() {
  DiffPoly x = DiffPoly::var("X"), y = DiffPoly::var("Y");
  return dd(x, 3) * y + dd(y, 3) * x;
}

DiffPoly gmu_omega_cocycle_defect(const Rational& mu) {
  DiffPair a{DiffPoly::var("X"), DiffPoly::var("f")};
  DiffPair b{DiffPoly::var("Y"), DiffPoly::var("g")};
  DiffPair c{DiffPoly::var("Z"), DiffPoly::var("h")};
  auto omega = [](const DiffPair& p, const DiffPair& q) { return dd(p.first, 3) * q.first; };
  return omega(a, gmu_bracket(mu, b, c)) + omega(b, gmu_bracket(mu, c, a)) +
         omega(c, gmu_bracket(mu, a, b));
}

DiffPoly gmu_capital_omega_cocycle_defect(const Rational& mu) {
  DiffPair a{DiffPoly::var("X"), DiffPoly::var("f")};
  DiffPair b{DiffPoly::var("Y"), DiffPoly::var("g")};
  DiffPair c{DiffPoly::var("Z"), DiffPoly::var("h")};
  auto form = [](const DiffPair& p, const DiffPair& q) {
    return p.first * q.second - q.first * p.second;
  };
  return form(a, gmu_bracket(mu, b, c)) + form(b, gmu_bracket(mu, c, a)) +
         form(c, gmu_bracket(mu, a, b));
}

DiffOpMatrix gmu_o_operator(const Rational& eps) {
  DiffOpMatrix o(2, 2);
  o.at(0, 1) = DiffOp::identity();
  o.at(1, 0) = -DiffOp::identity();
  o.at(1, 1) = DiffOp::d(3).scaled(eps);
  return o;
}

DiffOpMatrix gmu_o_inverse(const Rational& eps) {
  DiffOpMatrix o(2, 2);
  o.at(0, 0) = DiffOp::d(3).scaled(eps);
  o.at(0, 1) = -DiffOp::identity();
  o.at(1, 0) = DiffOp::identity();
  return o;
}

DiffPair gmu_coadjoint(const Rational& mu, const DiffPair& xf, const DiffPair& up) {
  const DiffPoly& x = xf.first;
  const DiffPoly& f = xf.second;
  const DiffPoly& u = up.first;
  const DiffPoly& p = up.second;
  DiffPoly top = x * dd(u) + (dd(x) * u).scaled(Rational(2)) - f * dd(p) +
                 dd(dd(x) * dd(p), 2).scaled(mu) + dd(dd(x, 2) * dd(p)).scaled(mu);
  DiffPoly bottom = x * dd(p);
  return {top, bottom};
}

DiffPair gmu_o_apply(const Rational& eps, const DiffPair& up) {
  return {up.second, -up.first + dd(up.second, 3).scaled(eps)};
}

DiffPair gmu_dual_bracket(const Rational& mu, const Rational& eps, const DiffPair& up,
                          const DiffPair& vq) {
  DiffPair lhs = gmu_coadjoint(mu, gmu_o_apply(eps, up), vq);
  DiffPair rhs = gmu_coadjoint(mu, gmu_o_apply(eps, vq), up);
  return {lhs.first - rhs.first, lhs.second - rhs.second};
}

GmuDualIsoReport gmu_dual_iso(const Rational& mu, const Rational& eps) {
  DiffPair up{DiffPoly::var("u"), DiffPoly::var("p")};
  DiffPair vq{DiffPoly::var("v"), DiffPoly::var("q")};
  GmuDualIsoReport rep;
  rep.dual = gmu_dual_bracket(mu, eps, up, vq);
  // Identify (u,p) with the pair (p,u) of the (eps - mu) family member.
  DiffPair target = gmu_bracket(eps - mu, {up.second, up.first}, {vq.second, vq.first});
  rep.matches_relabeled_family =
      rep.dual.first == target.second && rep.dual.second == target.first;
  const DiffPoly& p = up.second;
  const DiffPoly& q = vq.second;
  DiffPoly leading = rep.dual.first - dd(p * vq.first - q * up.first) -
                     dd(dd(p) * dd(q, 2) - dd(p, 2) * dd(q)).scaled(eps - mu);
  rep.third_order_coefficient_exact = leading.is_zero();
  return rep;
}

DiffOp d1_linear_operator() {
  DiffPoly u = DiffPoly::var("u");
  // -(u d + d u) = -2u d - u'
  DiffOp op;
  op.add(1, u.scaled(Rational(-2)));
  op.add(0, -dd(u));
  return op;
}

bool d1_casimir_check(const DiffPoly& hamiltonian) {
  Sym u = diffsym("u");
  return d1_linear_operator().apply(hamiltonian.variational_derivative(u)).is_zero();
}

HamiltonianTriple gmu_hamiltonian_triple(const Rational& mu, const Rational& eps) {
  DiffPair up{DiffPoly::var("u"), DiffPoly::var("p")};
  DiffPair xf{DiffPoly::var("X"), DiffPoly::var("f")};
  Sym sx = diffsym("X"), sf = diffsym("f");

  HamiltonianTriple t;
  t.b0 = gmu_o_inverse(eps);

  // Linear operator from the coadjoint action: B(X) = -X . u.
  DiffPair minus_coad = gmu_coadjoint(mu, xf, up);
  DiffOpMatrix b1(2, 2);
  b1.at(0, 0) = -extract_operator(minus_coad.first, sx);
  b1.at(0, 1) = -extract_operator(minus_coad.first, sf);
  b1.at(1, 0) = -extract_operator(minus_coad.second, sx);
  b1.at(1, 1) = -extract_operator(minus_coad.second, sf);
  // Closed form: -[[u d + d u + mu (d^2 p' d + d p' d^2), -p'], [p', 0]]
  {
    DiffPoly u = up.first, pp = dd(up.second);
    DiffOp star2 = DiffOp::mult(u) * DiffOp::d(1) + DiffOp::d(1) * DiffOp::mult(u) +
                   (DiffOp::d(2) * DiffOp::mult(pp) * DiffOp::d(1) +
                    DiffOp::d(1) * DiffOp::mult(pp) * DiffOp::d(2))
                       .scaled(mu);
    DiffOpMatrix b1t(2, 2);
    b1t.at(0, 0) = -star2;
    b1t.at(0, 1) = DiffOp::mult(pp);
    b1t.at(1, 0) = DiffOp::mult(-pp);
    if (!(b1 == b1t))
      throw std::logic_error("linear operator: closed form and coadjoint route disagree");
  }
  t.b1 = b1;

  // Quadratic operator: B(X) = O(X . u) . u, extracted from a test covector.
  DiffPair w = gmu_coadjoint(mu, xf, up);
  DiffPair res = gmu_coadjoint(mu, gmu_o_apply(eps, w), up);
  DiffOpMatrix b2(2, 2);
  b2.at(0, 0) = extract_operator(res.first, sx);
  b2.at(0, 1) = extract_operator(res.first, sf);
  b2.at(1, 0) = extract_operator(res.second, sx);
  b2.at(1, 1) = extract_operator(res.second, sf);
  {
    DiffPoly u = up.first, pp = dd(up.second);
    DiffPoly p2 = dd(up.second, 2), p3 = dd(up.second, 3);
    DiffPoly hook = p2 * p2.scaled(Rational(3)) - pp * p3.scaled(Rational(2));
    DiffOp star = (DiffOp::mult(pp * u) * DiffOp::d(1) + DiffOp::d(1) * DiffOp::mult(pp * u))
                      .scaled(Rational(2)) +
                  (DiffOp::mult(pp) * DiffOp::d(3) * DiffOp::mult(pp))
                      .scaled(Rational(mu * 4 - eps)) +
                  (DiffOp::mult(hook) * DiffOp::d(1) + DiffOp::d(1) * DiffOp::mult(hook))
                      .scaled(mu);
    DiffOpMatrix b2t(2, 2);
    b2t.at(0, 0) = star;
    b2t.at(0, 1) = DiffOp::mult(-(pp * pp));
    b2t.at(1, 0) = DiffOp::mult(pp * pp);
    if (!(b2 == b2t))
      throw std::logic_error("quadratic operator: closed form and operator route disagree");
  }
  t.b2 = b2;
  return t;
}

namespace {

// {H, F}_B with H, F linear in the dependent pair, H = u X + p f.
DiffPoly linear_pair_bracket(const DiffOpMatrix& b, const DiffPair& hf, const DiffPair& fg) {
  std::vector<DiffPoly> bx = b.apply({hf.first, hf.second});
  return fg.first * bx[0] + fg.second * bx[1];
}

DiffPoly triple_sum_term(const DiffOpMatrix& ba, const DiffOpMatrix& bb, const DiffPair& a,
                         const DiffPair& b, const DiffPair& c) {
  DiffPoly hf = linear_pair_bracket(ba, a, b);
  Sym su = diffsym("u"), sp = diffsym("p");
  std::vector<DiffPoly> w{hf.variational_derivative(su), hf.variational_derivative(sp)};
  std::vector<DiffPoly> bw = bb.apply(w);
  return c.first * bw[0] + c.second * bw[1];
}

}  // namespace

DiffPoly diff_jacobi_sum(const DiffOpMatrix& b) { return diff_compat_sum(b, b).scaled(Rational(1, 2)); }

DiffPoly diff_compat_sum(const DiffOpMatrix& ba, const DiffOpMatrix& bb) {
  DiffPair a{DiffPoly::var("X"), DiffPoly::var("f")};
  DiffPair p2{DiffPoly::var("Y"), DiffPoly::var("g")};
  DiffPair p3{DiffPoly::var("Z"), DiffPoly::var("h")};
  DiffPoly sum;
  const DiffPair* tri[3] = {&a, &p2, &p3};
  for (int k = 0; k < 3; ++k) {
    const DiffPair& s1 = *tri[k];
    const DiffPair& s2 = *tri[(k + 1) % 3];
    const DiffPair& s3 = *tri[(k + 2) % 3];
    sum = sum + triple_sum_term(ba, bb, s1, s2, s3) + triple_sum_term(bb, ba, s1, s2, s3);
  }
  return sum;
}

std::vector<DiffPoly> hamiltonian_map_criterion(const std::vector<DiffPoly>& images,
                                                const std::vector<Sym>& source_vars,
                                                const std::vector<Sym>& target_vars,
                                                const DiffOpMatrix& b_source,
                                                const DiffOpMatrix& b_target) {
  int n1 = static_cast<int>(source_vars.size());
  int n2 = static_cast<int>(target_vars.size());
  if (static_cast<int>(images.size()) != n1)
    throw std::invalid_argument("one image per source variable required");
  if (b_source.rows() != n1 || b_source.cols() != n1 || b_target.rows() != n2 ||
      b_target.cols() != n2)
    throw std::invalid_argument("operator shapes do not match the variable lists");

  DiffOpMatrix mapped = b_source;
  for (int k = 0; k < n1; ++k) mapped = mapped.substitute(source_vars[k], images[k]);

  DiffOpMatrix frechet(n1, n2);
  for (int k = 0; k < n1; ++k)
    for (int t = 0; t < n2; ++t) frechet.at(k, t) = frechet_derivative(images[k], target_vars[t]);

  DiffOpMatrix defect = mapped - frechet * b_target * frechet.adjoint();

  std::vector<DiffPoly> out;
  for (int i = 0; i < n1; ++i) {
    DiffPoly left = DiffPoly::var("A" + std::to_string(i));
    for (int j = 0; j < n1; ++j) {
      DiffPoly right = DiffPoly::var("B" + std::to_string(j));
      out.push_back(left * defect.at(i, j).apply(right));
    }
  }
  return out;
}

}  // namespace omatrix
