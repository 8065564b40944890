#include "omatrix/clebsch.hpp"

#include <stdexcept>

namespace omatrix {

std::vector<std::string> phase_var_names(int dim_v) {
  std::vector<std::string> names;
  for (int a = 0; a < dim_v; ++a) names.push_back("x" + std::to_string(a + 1));
  for (int a = 0; a < dim_v; ++a) names.push_back("p" + std::to_string(a + 1));
  return names;
}

ClebschMap clebsch_map(const Representation& chi) {
  if (!chi.is_valid()) throw std::invalid_argument("invalid representation");
  int n = chi.algebra().dim();
  int dv = chi.dim_v();
  ClebschMap phi{n, dv, {}};
  for (int s = 0; s < n; ++s) {
    Poly image(2 * dv);
    for (int a = 0; a < dv; ++a)
      for (int b = 0; b < dv; ++b) {
        if (chi.chi().at(s, a, b) == 0) continue;
        std::vector<int> e(2 * dv, 0);
        e[a] += 1;       // x^a
        e[dv + b] += 1;  // p_b
        image.add_term(e, chi.chi().at(s, a, b));
      }
    phi.images.push_back(image);
  }
  return phi;
}

PoissonStructure symplectic_bracket(int dim_v) {
  int n2 = 2 * dim_v;
  std::vector<Poly> pi(static_cast<std::size_t>(n2) * n2, Poly(n2));
  for (int a = 0; a < dim_v; ++a) {
    pi[static_cast<std::size_t>(a) * n2 + dim_v + a] = Poly::constant(n2, Rational(1));
    pi[static_cast<std::size_t>(dim_v + a) * n2 + a] = Poly::constant(n2, Rational(-1));
  }
  return PoissonStructure(n2, std::move(pi), phase_var_names(dim_v));
}

PoissonStructure quadratic_phase_bracket(const Representation& chi, const Tensor& r) {
  const LieAlgebra& l = chi.algebra();
  int dv = chi.dim_v();
  int n2 = 2 * dv;
  OOperator o = r_to_operator(l, r);
  if (!o.is_skew()) throw std::invalid_argument("phase bracket needs a skew array");
  if (!o_equation_defect(o).is_zero())
    throw std::invalid_argument("phase bracket refused: operator equation fails");
  if (!chi.is_valid()) throw std::invalid_argument("invalid representation");

  auto xvar = [&](int a) { return a; };
  auto pvar = [&](int a) { return dv + a; };
  std::vector<Poly> pi(static_cast<std::size_t>(n2) * n2, Poly(n2));
  auto put = [&](int i, int j, const Poly& v) { pi[static_cast<std::size_t>(i) * n2 + j] = v; };
  const Rank3& x = chi.chi();

  for (int a = 0; a < dv; ++a)
    for (int b = 0; b < dv; ++b) {
      Poly xx(n2), px(n2), pp(n2);
      for (const auto& [st, rst] : r.entries()) {
        int s = st[0], t = st[1];
        for (int mu = 0; mu < dv; ++mu)
          for (int nu = 0; nu < dv; ++nu) {
            // {x^a, x^b} = sum r^{st} chi_{s mu}^a chi_{t nu}^b x^mu x^nu
            if (x.at(s, mu, a) != 0 && x.at(t, nu, b) != 0) {
              std::vector<int> e(n2, 0);
              e[xvar(mu)] += 1;
              e[xvar(nu)] += 1;
              xx.add_term(e, rst * x.at(s, mu, a) * x.at(t, nu, b));
            }
            // {p_a, x^b} = - sum r^{st} chi_{s a}^mu chi_{t nu}^b p_mu x^nu
            if (x.at(s, a, mu) != 0 && x.at(t, nu, b) != 0) {
              std::vector<int> e(n2, 0);
              e[pvar(mu)] += 1;
              e[xvar(nu)] += 1;
              px.add_term(e, -rst * x.at(s, a, mu) * x.at(t, nu, b));
            }
            // {p_a, p_b} = sum r^{st} chi_{s a}^mu chi_{t b}^nu p_mu p_nu
            if (x.at(s, a, mu) != 0 && x.at(t, b, nu) != 0) {
              std::vector<int> e(n2, 0);
              e[pvar(mu)] += 1;
              e[pvar(nu)] += 1;
              pp.add_term(e, rst * x.at(s, a, mu) * x.at(t, b, nu));
            }
          }
      }
      put(xvar(a), xvar(b), xx);
      put(pvar(a), xvar(b), px);
      put(xvar(b), pvar(a), -px);
      put(pvar(a), pvar(b), pp);
    }

  PoissonStructure p(n2, std::move(pi), phase_var_names(dv));
  if (!p.jacobi_holds())
    throw std::logic_error("quadratic phase bracket from a verified operator must satisfy Jacobi");
  return p;
}

std::vector<Poly> hamiltonian_map_defect(const ClebschMap& phi, const PoissonStructure& src,
                                         const PoissonStructure& tgt) {
  if (src.nvars() != phi.n_u || tgt.nvars() != 2 * phi.dim_v)
    throw std::invalid_argument("map and bracket rings disagree");
  int n = phi.n_u;
  std::vector<Poly> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly lhs = src.pi(i, j).substitute(phi.images);
      Poly rhs = tgt.bracket(phi.images[i], phi.images[j]);
      out.push_back(lhs - rhs);
    }
  return out;
}

Representation dual_representation(const Representation& chi) {
  Representation d = chi.dual();
  if (!d.is_valid())
    throw std::logic_error("dual of a representation must be a representation");
  return d;
}

bool phase_swap_symmetry_holds(const Representation& chi, const Tensor& r) {
  int dv = chi.dim_v();
  int n2 = 2 * dv;
  PoissonStructure original = quadratic_phase_bracket(chi, r);
  PoissonStructure dual = quadratic_phase_bracket(dual_representation(chi), r);
  // sigma swaps x^a with p_a.
  std::vector<Poly> swap_images;
  for (int a = 0; a < dv; ++a) swap_images.push_back(Poly::variable(n2, dv + a));
  for (int a = 0; a < dv; ++a) swap_images.push_back(Poly::variable(n2, a));
  auto sigma = [&](int i) { return i < dv ? dv + i : i - dv; };
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j)
      if (dual.pi(i, j).substitute(swap_images) != original.pi(sigma(i), sigma(j)))
        return false;
  return true;
}

std::vector<Poly> nabla_leibniz_defect(const Representation& chi) {
  const LieAlgebra& l = chi.algebra();
  int n = l.dim();
  int dv = chi.dim_v();
  int n2 = 2 * dv;
  ClebschMap phi = clebsch_map(chi);
  const Rank3& x = chi.chi();
  std::vector<Poly> out;
  for (int m = 0; m < n; ++m)
    for (int s = 0; s < n; ++s) {
      // (X . (x nabla p))_s = - sum_b c_{ms}^b Phi_b
      Poly lhs(n2);
      for (int b = 0; b < n; ++b)
        if (l.c().at(m, s, b) != 0) lhs = lhs - phi.images[b].scaled(l.c().at(m, s, b));
      // ((X.x) nabla p)_s + (x nabla (X.p))_s
      Poly rhs(n2);
      for (int a = 0; a < dv; ++a)
        for (int g = 0; g < dv; ++g) {
          if (x.at(s, a, g) == 0) continue;
          for (int mu = 0; mu < dv; ++mu) {
            if (x.at(m, mu, a) != 0) {
              std::vector<int> e(n2, 0);
              e[mu] += 1;
              e[dv + g] += 1;
              Poly t(n2);
              t.add_term(e, x.at(s, a, g) * x.at(m, mu, a));
              rhs = rhs + t;
            }
            if (x.at(m, g, mu) != 0) {
              std::vector<int> e(n2, 0);
              e[a] += 1;
              e[dv + mu] += 1;
              Poly t(n2);
              t.add_term(e, -x.at(s, a, g) * x.at(m, g, mu));
              rhs = rhs + t;
            }
          }
        }
      out.push_back(lhs - rhs);
    }
  return out;
}

std::vector<Poly> phase_action_defect(const Representation& chi, const Tensor& r) {
  const LieAlgebra& l = chi.algebra();
  int n = l.dim();
  int dv = chi.dim_v();
  int n2 = 2 * dv;
  PoissonStructure p = quadratic_phase_bracket(chi, r);
  AlgebraOnModule dual = induced_bracket(r_to_operator(l, r));
  const Rank3& x = chi.chi();

  // H~ rows for coordinate Hamiltonians: for x^a the s-component is
  // sum chi_{s mu}^a x^mu, for p_a it is - sum chi_{s a}^b p_b.
  auto tilde = [&](int h) {
    std::vector<Poly> t(n, Poly(n2));
    if (h < dv) {
      int a = h;
      for (int s = 0; s < n; ++s)
        for (int mu = 0; mu < dv; ++mu)
          if (x.at(s, mu, a) != 0)
            t[s] = t[s] + Poly::variable(n2, mu).scaled(x.at(s, mu, a));
    } else {
      int a = h - dv;
      for (int s = 0; s < n; ++s)
        for (int b = 0; b < dv; ++b)
          if (x.at(s, a, b) != 0)
            t[s] = t[s] - Poly::variable(n2, dv + b).scaled(x.at(s, a, b));
    }
    return t;
  };

  std::vector<Poly> out;
  for (int m = 0; m < n; ++m) {
    // X^\wedge on coordinates: x -> chi(X) x, p -> -chi(X)^T p.
    std::vector<Poly> field(n2, Poly(n2));
    for (int a = 0; a < dv; ++a) {
      for (int mu = 0; mu < dv; ++mu) {
        if (x.at(m, mu, a) != 0)
          field[a] = field[a] + Poly::variable(n2, mu).scaled(x.at(m, mu, a));
        if (x.at(m, a, mu) != 0)
          field[dv + a] = field[dv + a] - Poly::variable(n2, dv + mu).scaled(x.at(m, a, mu));
      }
    }
    for (int h1 = 0; h1 < n2; ++h1) {
      std::vector<Poly> t1 = tilde(h1);
      for (int h2 = 0; h2 < n2; ++h2) {
        std::vector<Poly> t2 = tilde(h2);
        Poly lhs = apply_derivation(field, p.pi(h1, h2));
        for (int s = 0; s < n2; ++s) {
          Poly d1 = field[h1].derivative(s);
          if (!d1.is_zero()) lhs = lhs - d1 * p.pi(s, h2);
          Poly d2 = field[h2].derivative(s);
          if (!d2.is_zero()) lhs = lhs - d2 * p.pi(h1, s);
        }
        Poly rhs(n2);
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t)
            if (dual.bracket.at(s, t, m) != 0)
              rhs = rhs + (t1[s] * t2[t]).scaled(dual.bracket.at(s, t, m));
        out.push_back(lhs - rhs);
      }
    }
  }
  return out;
}

}  // namespace omatrix
