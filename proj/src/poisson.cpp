#include "omatrix/poisson.hpp"

#include <stdexcept>

namespace omatrix {

namespace {

std::vector<std::string> u_names(const LieAlgebra& l) {
  std::vector<std::string> names;
  for (const auto& n : l.names()) names.push_back("u_" + n);
  return names;
}

}  // namespace

PoissonStructure::PoissonStructure(int nvars, std::vector<Poly> pi,
                                   std::vector<std::string> var_names)
    : nvars_(nvars), pi_(std::move(pi)), var_names_(std::move(var_names)) {
  if (static_cast<int>(pi_.size()) != nvars * nvars)
    throw std::invalid_argument("bracket matrix must be square over the variables");
  for (int i = 0; i < nvars; ++i)
    for (int j = 0; j < nvars; ++j) {
      if (this->pi(i, j).nvars() != nvars)
        throw std::invalid_argument("bracket entries must live in the structure's ring");
      if (this->pi(i, j) != -this->pi(j, i))
        throw std::invalid_argument("bracket matrix must be antisymmetric");
    }
  if (var_names_.empty())
    for (int i = 0; i < nvars; ++i) var_names_.push_back("u" + std::to_string(i));
  if (static_cast<int>(var_names_.size()) != nvars)
    throw std::invalid_argument("variable name count mismatch");
}

Poly PoissonStructure::bracket(const Poly& f, const Poly& g) const {
  if (f.nvars() != nvars_ || g.nvars() != nvars_)
    throw std::invalid_argument("argument outside the structure's ring");
  Poly out(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    Poly df = f.derivative(i);
    if (df.is_zero()) continue;
    for (int j = 0; j < nvars_; ++j) {
      if (pi(i, j).is_zero()) continue;
      Poly dg = g.derivative(j);
      if (dg.is_zero()) continue;
      out = out + df * dg * pi(i, j);
    }
  }
  return out;
}

std::vector<Poly> PoissonStructure::jacobi_defect() const {
  std::vector<Poly> out(static_cast<std::size_t>(nvars_) * nvars_ * nvars_, Poly(nvars_));
  for (int i = 0; i < nvars_; ++i)
    for (int j = i + 1; j < nvars_; ++j)
      for (int k = j + 1; k < nvars_; ++k) {
        Poly ui = Poly::variable(nvars_, i);
        Poly uj = Poly::variable(nvars_, j);
        Poly uk = Poly::variable(nvars_, k);
        Poly sum = bracket(pi(i, j), uk) + bracket(pi(j, k), ui) + bracket(pi(k, i), uj);
        out[(static_cast<std::size_t>(i) * nvars_ + j) * nvars_ + k] = sum;
      }
  return out;
}

bool PoissonStructure::jacobi_holds() const {
  for (const auto& p : jacobi_defect())
    if (!p.is_zero()) return false;
  return true;
}

PoissonStructure linear_poisson(const LieAlgebra& l) {
  if (!bracket_jacobi_defect(l.c()).is_zero())
    throw std::invalid_argument("linear bracket requires the triple identity");
  int n = l.dim();
  std::vector<Poly> pi(static_cast<std::size_t>(n) * n, Poly(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly entry(n);
      for (int k = 0; k < n; ++k)
        if (l.c().at(i, j, k) != 0)
          entry = entry + Poly::variable(n, k).scaled(l.c().at(i, j, k));
      pi[static_cast<std::size_t>(i) * n + j] = entry;
    }
  return PoissonStructure(n, std::move(pi), u_names(l));
}

PoissonStructure quadratic_poisson(const LieAlgebra& l, const Tensor& r) {
  int n = l.dim();
  OOperator o = r_to_operator(l, r);
  if (!o.is_skew()) throw std::invalid_argument("quadratic bracket needs a skew array");
  if (!o_equation_defect(o).is_zero())
    throw std::invalid_argument("quadratic bracket refused: operator equation fails");
  std::vector<Poly> pi(static_cast<std::size_t>(n) * n, Poly(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly entry(n);
      for (const auto& [st, rst] : r.entries()) {
        int s = st[0], t = st[1];
        for (int a = 0; a < n; ++a) {
          if (l.c().at(i, s, a) == 0) continue;
          for (int b = 0; b < n; ++b) {
            if (l.c().at(j, t, b) == 0) continue;
            std::vector<int> e(n, 0);
            e[a] += 1;
            e[b] += 1;
            Poly term(n);
            term.add_term(e, rst * l.c().at(i, s, a) * l.c().at(j, t, b));
            entry = entry + term;
          }
        }
      }
      pi[static_cast<std::size_t>(i) * n + j] = entry;
    }
  PoissonStructure p(n, std::move(pi), u_names(l));
  if (!p.jacobi_holds())
    throw std::logic_error("quadratic bracket from a verified operator must satisfy Jacobi");
  return p;
}

PoissonStructure affine_poisson(const LieAlgebra& l, const Matrix& b) {
  int n = l.dim();
  if (b.rows() != n || b.cols() != n) throw std::invalid_argument("form shape mismatch");
  if (!b.is_skew()) throw std::invalid_argument("affine bracket needs a skew form");
  if (!cocycle_defect_of_form(l, b).is_zero())
    throw std::invalid_argument("affine bracket refused: the form is not closed");
  PoissonStructure lin = linear_poisson(l);
  std::vector<Poly> pi(static_cast<std::size_t>(n) * n, Poly(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      pi[static_cast<std::size_t>(i) * n + j] =
          lin.pi(i, j) + Poly::constant(n, b(i, j));
  PoissonStructure p(n, std::move(pi), u_names(l));
  if (!p.jacobi_holds())
    throw std::logic_error("affine bracket with a closed form must satisfy Jacobi");
  return p;
}

PoissonStructure constant_poisson(const LieAlgebra& l, const Matrix& b) {
  int n = l.dim();
  if (b.rows() != n || b.cols() != n) throw std::invalid_argument("form shape mismatch");
  if (!b.is_skew()) throw std::invalid_argument("constant bracket needs a skew form");
  std::vector<Poly> pi(static_cast<std::size_t>(n) * n, Poly(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      pi[static_cast<std::size_t>(i) * n + j] = Poly::constant(n, b(i, j));
  return PoissonStructure(n, std::move(pi), u_names(l));
}

Matrix inverse_pairing_form(const OOperator& o) {
  auto inv = o.m.inverse();
  if (!inv) throw std::invalid_argument("operator is not invertible");
  return inv->transpose();
}

Tensor cocycle_defect_of_form(const LieAlgebra& l, const Matrix& form) {
  int n = l.dim();
  Tensor out({n, n, n});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational sum(0);
        for (int s = 0; s < n; ++s) {
          sum += l.c().at(i, j, s) * form(s, k);
          sum += l.c().at(j, k, s) * form(s, i);
          sum += l.c().at(k, i, s) * form(s, j);
        }
        if (sum != 0) out.set({i, j, k}, sum);
      }
  return out;
}

std::vector<Poly> compatibility_defect(const PoissonStructure& p1, const PoissonStructure& p2) {
  if (p1.nvars() != p2.nvars())
    throw std::invalid_argument("brackets live on different rings");
  int n = p1.nvars();
  std::vector<Poly> out(static_cast<std::size_t>(n) * n * n, Poly(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Poly ui = Poly::variable(n, i);
        Poly uj = Poly::variable(n, j);
        Poly uk = Poly::variable(n, k);
        Poly sum = p2.bracket(p1.pi(i, j), uk) + p2.bracket(p1.pi(j, k), ui) +
                   p2.bracket(p1.pi(k, i), uj) + p1.bracket(p2.pi(i, j), uk) +
                   p1.bracket(p2.pi(j, k), ui) + p1.bracket(p2.pi(k, i), uj);
        out[(static_cast<std::size_t>(i) * n + j) * n + k] = sum;
      }
  return out;
}

std::vector<Poly> casimir_defect(const PoissonStructure& p, const Poly& h) {
  int n = p.nvars();
  std::vector<Poly> out;
  for (int i = 0; i < n; ++i) out.push_back(p.bracket(h, Poly::variable(n, i)));
  return out;
}

std::vector<Poly> coadjoint_field(const LieAlgebra& l, int m) {
  int n = l.dim();
  std::vector<Poly> field(n, Poly(n));
  // (e_m . u)_s = - sum_b c_{ms}^b u_b
  for (int s = 0; s < n; ++s)
    for (int b = 0; b < n; ++b)
      if (l.c().at(m, s, b) != 0)
        field[s] = field[s] - Poly::variable(n, b).scaled(l.c().at(m, s, b));
  return field;
}

std::vector<Poly> coadjoint_invariant_defect(const LieAlgebra& l, const Poly& h) {
  int n = l.dim();
  if (h.nvars() != n) throw std::invalid_argument("polynomial outside the dual ring");
  // ((dH/du).u)_s = sum_i dH/du_i (e_i . u)_s
  std::vector<Poly> out(n, Poly(n));
  for (int i = 0; i < n; ++i) {
    Poly dh = h.derivative(i);
    if (dh.is_zero()) continue;
    std::vector<Poly> f = coadjoint_field(l, i);
    for (int s = 0; s < n; ++s) out[s] = out[s] + dh * f[s];
  }
  return out;
}

Poly apply_derivation(const std::vector<Poly>& field, const Poly& f) {
  int n = f.nvars();
  if (static_cast<int>(field.size()) != n)
    throw std::invalid_argument("derivation field size mismatch");
  Poly out(n);
  for (int s = 0; s < n; ++s) {
    Poly df = f.derivative(s);
    if (!df.is_zero() && !field[s].is_zero()) out = out + field[s] * df;
  }
  return out;
}

std::vector<Poly> infinitesimal_action_defect(const LieAlgebra& l, const PoissonStructure& p,
                                              const AlgebraOnModule* dual_bracket,
                                              ActionMode mode, const Matrix* b) {
  int n = l.dim();
  if (p.nvars() != n) throw std::invalid_argument("structure/algebra dimension mismatch");
  if (mode == ActionMode::quadratic) {
    if (dual_bracket == nullptr || dual_bracket->dim != n)
      throw std::invalid_argument("quadratic mode needs the operator-induced dual bracket");
  } else if (dual_bracket != nullptr) {
    throw std::invalid_argument("linear and affine modes pair with the abelian dual");
  }
  if (mode == ActionMode::affine) {
    if (b == nullptr || b->rows() != n || b->cols() != n)
      throw std::invalid_argument("affine mode needs the constant form");
  } else if (b != nullptr) {
    throw std::invalid_argument("constant form only enters in affine mode");
  }

  std::vector<Poly> out(static_cast<std::size_t>(n) * n * n, Poly(n));
  for (int m = 0; m < n; ++m) {
    std::vector<Poly> field = coadjoint_field(l, m);
    if (mode == ActionMode::affine)
      for (int s = 0; s < n; ++s)
        field[s] = field[s] - Poly::constant(n, (*b)(m, s));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Poly lhs = apply_derivation(field, p.pi(i, j));
        for (int s = 0; s < n; ++s) {
          Poly dfi = field[i].derivative(s);
          if (!dfi.is_zero()) lhs = lhs - dfi * p.pi(s, j);
          Poly dfj = field[j].derivative(s);
          if (!dfj.is_zero()) lhs = lhs - dfj * p.pi(i, s);
        }
        if (mode == ActionMode::quadratic) {
          // <[H~, F~], e_m> with H~_s = sum_b c_{is}^b u_b for H = u_i.
          Poly rhs(n);
          for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
              if (dual_bracket->bracket.at(s, t, m) == 0) continue;
              Poly hs(n), ft(n);
              for (int bb = 0; bb < n; ++bb) {
                if (l.c().at(i, s, bb) != 0)
                  hs = hs + Poly::variable(n, bb).scaled(l.c().at(i, s, bb));
                if (l.c().at(j, t, bb) != 0)
                  ft = ft + Poly::variable(n, bb).scaled(l.c().at(j, t, bb));
              }
              rhs = rhs + (hs * ft).scaled(dual_bracket->bracket.at(s, t, m));
            }
          lhs = lhs - rhs;
        }
        out[(static_cast<std::size_t>(m) * n + i) * n + j] = lhs;
      }
  }
  return out;
}

}  // namespace omatrix
