#ifndef OMATRIX_POISSON_HPP
#define OMATRIX_POISSON_HPP

#include "omatrix/lie.hpp"
#include "omatrix/poly.hpp"

namespace omatrix {

/// Polynomial Poisson structure: the matrix of brackets between coordinate
/// functions.  Antisymmetry is enforced at construction; Jacobi is a
/// property to be computed, not assumed.
class PoissonStructure {
 public:
  PoissonStructure(int nvars, std::vector<Poly> pi, std::vector<std::string> var_names);

  int nvars() const { return nvars_; }
  const Poly& pi(int i, int j) const { return pi_[static_cast<std::size_t>(i) * nvars_ + j]; }
  const std::vector<std::string>& var_names() const { return var_names_; }

  Poly bracket(const Poly& f, const Poly& g) const;

  // {{u_i,u_j},u_k} + cyclic for i<j<k; index ((i*n+j)*n+k).
  std::vector<Poly> jacobi_defect() const;
  bool jacobi_holds() const;

 private:
  int nvars_;
  std::vector<Poly> pi_;
  std::vector<std::string> var_names_;
};

// {u_i,u_j} = sum_k c_ij^k u_k.
PoissonStructure linear_poisson(const LieAlgebra& l);

// {u_i,u_j} = sum r^{st} c_is^a c_jt^b u_a u_b.  The coefficient array must
// pass the operator equation first; unverified input is refused.  The
// result is asserted to satisfy Jacobi.
PoissonStructure quadratic_poisson(const LieAlgebra& l, const Tensor& r);

// {u_i,u_j} = sum_k c_ij^k u_k + b(i,j) for a skew closed form b.
PoissonStructure affine_poisson(const LieAlgebra& l, const Matrix& b);

// Constant-coefficient bracket {u_i,u_j} = b(i,j).
PoissonStructure constant_poisson(const LieAlgebra& l, const Matrix& b);

// Pairing form of the inverse operator: form(i,j) = <O^{-1}(e_i), e_j>.
Matrix inverse_pairing_form(const OOperator& o);

// form([e_i,e_j], e_k) + cyclic over basis triples.
Tensor cocycle_defect_of_form(const LieAlgebra& l, const Matrix& form);

// Mixed triple sum {{.,.}_1,.}_2 + {{.,.}_2,.}_1 + cyclic on coordinates.
std::vector<Poly> compatibility_defect(const PoissonStructure& p1, const PoissonStructure& p2);

// {h, u_i} for every coordinate; the zero vector characterizes Casimirs.
std::vector<Poly> casimir_defect(const PoissonStructure& p, const Poly& h);

// Components of (dH/du).u for H = h; zero means h is a coadjoint invariant.
std::vector<Poly> coadjoint_invariant_defect(const LieAlgebra& l, const Poly& h);

// Components of the coadjoint vector field e_m . u, as linear polynomials.
std::vector<Poly> coadjoint_field(const LieAlgebra& l, int m);

// Derivation with the given coordinate images applied to f.
Poly apply_derivation(const std::vector<Poly>& field, const Poly& f);

enum class ActionMode { linear, affine, quadratic };

/// Criterion of infinitesimal Hamiltonian action evaluated on coordinate
/// Hamiltonians; index ((m*n+i)*n+j) over (basis element, coordinate,
/// coordinate).  Linear and affine modes pair with the abelian dual bracket
/// (pass nullptr); the quadratic mode requires the operator-induced one.
std::vector<Poly> infinitesimal_action_defect(const LieAlgebra& l, const PoissonStructure& p,
                                              const AlgebraOnModule* dual_bracket,
                                              ActionMode mode, const Matrix* b = nullptr);

}  // namespace omatrix

#endif
