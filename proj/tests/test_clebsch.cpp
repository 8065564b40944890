#include "doctest.h"
#include "omatrix/clebsch.hpp"
#include "omatrix/random.hpp"

using namespace omatrix;

namespace {

Tensor he_solution() {
  Tensor r({3, 3});
  r.set({0, 1}, Rational(1));
  r.set({1, 0}, Rational(-1));
  return r;
}

bool all_zero(const std::vector<Poly>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("bilinear images of the dual coordinates") {
  LieAlgebra sl2 = LieAlgebra::sl2();
  Representation fund = Representation::sl2_fundamental(sl2);
  ClebschMap phi = clebsch_map(fund);
  // variables: x1 x2 p1 p2
  Poly xh(4), xe(4), xf(4);
  xh.add_term({1, 0, 1, 0}, Rational(1));   // x1 p1
  xh.add_term({0, 1, 0, 1}, Rational(-1));  // -x2 p2
  xe.add_term({0, 1, 1, 0}, Rational(1));   // x2 p1
  xf.add_term({1, 0, 0, 1}, Rational(1));   // x1 p2
  CHECK(phi.images[0] == xh);
  CHECK(phi.images[1] == xe);
  CHECK(phi.images[2] == xf);

  // zero representation maps everything to zero
  ClebschMap zero = clebsch_map(Representation::trivial(sl2, 2));
  for (const auto& im : zero.images) CHECK(im.is_zero());

  // rank-one identity action gives the full contraction
  LieAlgebra ab1 = LieAlgebra::abelian(1);
  Rank3 chi(1, 2, 2);
  chi.at(0, 0, 0) = 1;
  chi.at(0, 1, 1) = 1;
  ClebschMap diag = clebsch_map(Representation(ab1, 2, std::move(chi)));
  Poly sum(4);
  sum.add_term({1, 0, 1, 0}, Rational(1));
  sum.add_term({0, 1, 0, 1}, Rational(1));
  CHECK(diag.images[0] == sum);
}

TEST_CASE("canonical pairs bracket") {
  PoissonStructure symp = symplectic_bracket(1);
  CHECK(symp.pi(0, 1) == Poly::constant(2, Rational(1)));
  CHECK(symp.pi(1, 0) == Poly::constant(2, Rational(-1)));
  CHECK(symp.jacobi_holds());

  PoissonStructure symp2 = symplectic_bracket(2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      CHECK(symp2.pi(a, 2 + b) ==
            (a == b ? Poly::constant(4, Rational(1)) : Poly(4)));
      CHECK(symp2.pi(a, b).is_zero());
      CHECK(symp2.pi(2 + a, 2 + b).is_zero());
    }
  CHECK(symp2.jacobi_holds());
}

TEST_CASE("quadratic phase bracket: degenerate inputs and the verified fixture") {
  LieAlgebra sl2 = LieAlgebra::sl2();
  Representation fund = Representation::sl2_fundamental(sl2);

  PoissonStructure zero_r = quadratic_phase_bracket(fund, Tensor({3, 3}));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(zero_r.pi(i, j).is_zero());

  PoissonStructure zero_chi =
      quadratic_phase_bracket(Representation::trivial(sl2, 2), he_solution());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(zero_chi.pi(i, j).is_zero());

  PoissonStructure quad = quadratic_phase_bracket(fund, he_solution());
  CHECK(quad.jacobi_holds());
  std::vector<Poly> compat = compatibility_defect(quad, symplectic_bracket(2));
  CHECK(all_zero(compat));

  // unverified arrays are refused
  Tensor bad({3, 3});
  bad.set({1, 2}, Rational(1));
  bad.set({2, 1}, Rational(-1));
  CHECK_THROWS(quadratic_phase_bracket(fund, bad));
}

TEST_CASE("the map is Hamiltonian: linear to canonical, quadratic to quadratic") {
  LieAlgebra sl2 = LieAlgebra::sl2();
  Representation fund = Representation::sl2_fundamental(sl2);
  ClebschMap phi = clebsch_map(fund);

  CHECK(all_zero(hamiltonian_map_defect(phi, linear_poisson(sl2), symplectic_bracket(2))));
  CHECK(all_zero(hamiltonian_map_defect(phi, quadratic_poisson(sl2, he_solution()),
                                        quadratic_phase_bracket(fund, he_solution()))));

  // zero source bracket and zero target bracket
  ClebschMap zero_phi = clebsch_map(Representation::trivial(sl2, 2));
  PoissonStructure zero_src = linear_poisson(LieAlgebra::abelian(3));
  PoissonStructure zero_tgt = quadratic_phase_bracket(fund, Tensor({3, 3}));
  CHECK(all_zero(hamiltonian_map_defect(zero_phi, zero_src, zero_tgt)));

  // a linear source against the quadratic target must NOT be Hamiltonian here
  CHECK(!all_zero(hamiltonian_map_defect(phi, linear_poisson(sl2),
                                         quadratic_phase_bracket(fund, he_solution()))));
}

TEST_CASE("dual representation and the coordinate swap symmetry") {
  LieAlgebra sl2 = LieAlgebra::sl2();
  Representation fund = Representation::sl2_fundamental(sl2);
  Representation dualrep = dual_representation(fund);
  for (int i = 0; i < 3; ++i)
    CHECK(dualrep.matrix_of(i) == -fund.matrix_of(i).transpose());
  CHECK(dualrep.is_valid());

  Representation triv = Representation::trivial(sl2, 2);
  for (int i = 0; i < 3; ++i) CHECK(dual_representation(triv).matrix_of(i).is_zero());

  CHECK(phase_swap_symmetry_holds(fund, he_solution()));
  CHECK(phase_swap_symmetry_holds(Representation::coadjoint(sl2), he_solution()));
}

TEST_CASE("the doubled module reproduces every block from the x-x corner") {
  LieAlgebra sl2 = LieAlgebra::sl2();
  Representation fund = Representation::sl2_fundamental(sl2);
  Representation sum = fund.direct_sum(dual_representation(fund));
  CHECK(sum.is_valid());
  PoissonStructure big = quadratic_phase_bracket(sum, he_solution());
  PoissonStructure small = quadratic_phase_bracket(fund, he_solution());

  // V(new) = V + V*: its x-coordinates are (x1, x2, y1, y2) with the y's
  // transforming like the old p's, so the x-x corner of the big bracket
  // restricted to (x1, x2, y1, y2) contains all four original blocks.
  std::vector<Poly> images;  // old (x1, x2, p1, p2) -> new (x1, x2, y1, y2)
  images.push_back(Poly::variable(8, 0));
  images.push_back(Poly::variable(8, 1));
  images.push_back(Poly::variable(8, 2));
  images.push_back(Poly::variable(8, 3));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(big.pi(a, b) == small.pi(a, b).substitute(images));
}

TEST_CASE("product-rule identity for the contraction map") {
  LieAlgebra sl2 = LieAlgebra::sl2();
  CHECK(all_zero(nabla_leibniz_defect(Representation::sl2_fundamental(sl2))));
  CHECK(all_zero(nabla_leibniz_defect(Representation::coadjoint(sl2))));
}

TEST_CASE("phase-space action criterion") {
  LieAlgebra sl2 = LieAlgebra::sl2();
  Representation fund = Representation::sl2_fundamental(sl2);
  CHECK(all_zero(phase_action_defect(fund, he_solution())));
  CHECK(all_zero(phase_action_defect(fund, Tensor({3, 3}))));

  LieAlgebra ab = LieAlgebra::abelian(2);
  Rank3 chi(2, 2, 2);
  chi.at(0, 0, 0) = 1;
  chi.at(1, 1, 1) = 1;
  Representation abrep(ab, 2, std::move(chi));
  Rng rng(97);
  CHECK(all_zero(phase_action_defect(abrep, rng.skew_tensor(2))));
}
