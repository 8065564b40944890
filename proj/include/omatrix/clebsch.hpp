#ifndef OMATRIX_CLEBSCH_HPP
#define OMATRIX_CLEBSCH_HPP

#include "omatrix/poisson.hpp"

namespace omatrix {

// Phase-space ring conventions: variables 0..dimV-1 are the x's,
// dimV..2*dimV-1 are the p's.
std::vector<std::string> phase_var_names(int dim_v);

/// The map sending each coordinate on the dual of the algebra to the
/// bilinear expression sum chi_{s a}^b x^a p_b on the phase space.
struct ClebschMap {
  int n_u = 0;
  int dim_v = 0;
  std::vector<Poly> images;  // one per u-coordinate, in 2*dim_v variables
};

ClebschMap clebsch_map(const Representation& chi);

// {x^a, p_b} = delta, {x,x} = {p,p} = 0.
PoissonStructure symplectic_bracket(int dim_v);

// Quadratic bracket on the phase space induced by a verified skew array
// and a representation; Jacobi is asserted on the result.
PoissonStructure quadratic_phase_bracket(const Representation& chi, const Tensor& r);

// Phi({u_i,u_j}_src) - {Phi(u_i), Phi(u_j)}_tgt for all coordinate pairs,
// flattened row-major; all zero means the map is Hamiltonian.
std::vector<Poly> hamiltonian_map_defect(const ClebschMap& phi, const PoissonStructure& src,
                                         const PoissonStructure& tgt);

// chi^d(X) = -chi(X)^T; validity is asserted.
Representation dual_representation(const Representation& chi);

// Rebuilding the quadratic phase bracket from the dual representation and
// swapping x with p reproduces the original bracket family exactly.
bool phase_swap_symmetry_holds(const Representation& chi, const Tensor& r);

// X.(x nabla p) = (X.x) nabla p + x nabla (X.p) componentwise; index (m, s).
std::vector<Poly> nabla_leibniz_defect(const Representation& chi);

// Infinitesimal-action criterion on the phase space: coordinate Hamiltonians
// against the operator-induced dual bracket; flattened (m, h1, h2).
std::vector<Poly> phase_action_defect(const Representation& chi, const Tensor& r);

}  // namespace omatrix

#endif
