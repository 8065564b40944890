// Acceptance suite: one line per criterion, exact checks throughout.
// Returns the number of failed criteria.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "omatrix/checks.hpp"
#include "omatrix/clebsch.hpp"
#include "omatrix/gmu.hpp"
#include "omatrix/poisson.hpp"
#include "omatrix/random.hpp"
#include "omatrix/yang_baxter.hpp"

using namespace omatrix;

namespace {

int g_failures = 0;

void report(int number, const std::string& title, bool ok) {
  std::printf("criterion %2d [%s]: %s\n", number, ok ? "PASS" : "FAIL", title.c_str());
  if (!ok) ++g_failures;
}

bool all_zero(const std::vector<Poly>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

Tensor skew_pair(int i, int j, const Rational& v, int n) {
  Tensor r({n, n});
  r.set({i, j}, v);
  r.set({j, i}, -v);
  return r;
}

Tensor he_solution() { return skew_pair(0, 1, Rational(1), 3); }

// conjugation automorphism of the rank-one fixture from an invertible
// two-by-two matrix, written in the (h, e, f) basis
Matrix sl2_automorphism(const Matrix& t) {
  Matrix tinv = *t.inverse();
  auto to_mat = [](int i) {
    Matrix m(2, 2);
    if (i == 0) {
      m(0, 0) = 1;
      m(1, 1) = -1;
    } else if (i == 1) {
      m(0, 1) = 1;
    } else {
      m(1, 0) = 1;
    }
    return m;
  };
  Matrix phi(3, 3);
  for (int i = 0; i < 3; ++i) {
    Matrix img = t * to_mat(i) * tinv;
    phi(0, i) = img(0, 0);   // h component
    phi(1, i) = img(0, 1);   // e component
    phi(2, i) = img(1, 0);   // f component
  }
  return phi;
}

Rank3 transport_bracket(const Rank3& c, const Matrix& t) {
  int n = c.d0;
  Matrix tinv = *t.inverse();
  Rank3 out(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational sum(0);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int s = 0; s < n; ++s) sum += t(a, i) * t(b, j) * c.at(a, b, s) * tinv(k, s);
        out.at(i, j, k) = sum;
      }
  return out;
}

Representation left_mult_dual(const LieAlgebra& lie, const BilinearProduct& p) {
  Rank3 chi(p.dim, p.dim, p.dim);
  for (int i = 0; i < p.dim; ++i)
    for (int b = 0; b < p.dim; ++b)
      for (int k = 0; k < p.dim; ++k) chi.at(i, b, k) = -p.m.at(i, k, b);
  return Representation(lie, p.dim, std::move(chi));
}

OOperator sl2_module_operator(const LieAlgebra& l, long c1, long c2, bool second) {
  Representation fund = Representation::sl2_fundamental(l);
  Matrix m(3, 2);
  if (!second) {
    m(0, 0) = c1;
    m(2, 0) = c2;
    m(2, 1) = c1;
  } else {
    m(1, 0) = c1;
    m(0, 1) = -c1;
    m(1, 1) = c2;
  }
  return OOperator{fund, l, m};
}

int run_cli(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// ---------------------------------------------------------------------------

void criterion_1() {
  bool ok = true;
  for (int d = 2; d <= 3; ++d) {
    ok = ok && check_artin(permutation_operator(d)).holds;
    ok = ok && check_qybe(Matrix::identity(d * d)).holds;
  }
  for (int d = 2; d <= 4; ++d) {
    Matrix p12 = embed_pair(permutation_operator(d), Slot::s12, d);
    Matrix p23 = embed_pair(permutation_operator(d), Slot::s23, d);
    Matrix m = mirror_operator(d);
    ok = ok && p23 * p12 * p23 == m && p12 * p23 * p12 == m;
  }
  Rng rng(2024);
  Matrix r = rng.matrix(4, 4);
  Matrix zero(4, 4);
  Matrix expected = cybe_operator_defect(r, 2);
  ok = ok && quasiclassical_defect(HSeries(Matrix::identity(4), r, zero)) == expected;
  for (int t = 0; t < 10; ++t) {
    Matrix rho = rng.matrix(4, 4);
    ok = ok && quasiclassical_defect(HSeries(Matrix::identity(4), r, rho)) == expected;
  }
  report(1, "braid/triple relations, mirror factorizations, order-two coefficient", ok);
}

void criterion_2() {
  LieAlgebra sl2 = LieAlgebra::sl2();
  bool ok = jacobi_check(sl2).holds;
  for (long c1 : {0L, 1L, -1L, 2L})
    for (long c2 : {0L, 1L, -1L, 2L}) {
      for (bool second : {false, true}) {
        OOperator o = sl2_module_operator(sl2, c1, c2, second);
        ok = ok && o_equation_defect(o).is_zero();
        AlgebraOnModule induced = induced_bracket(o);
        ok = ok && bracket_jacobi_defect(induced.bracket).is_zero();
      }
    }
  // pairing form closes for verified operators on the dual
  for (const Rational& lam : {Rational(1), Rational(-1), Rational(2)}) {
    OOperator o = r_to_operator(sl2, skew_pair(0, 1, lam, 3));
    ok = ok && o_equation_defect(o).is_zero();
    ok = ok && induced_cocycle_check(o).holds;
  }
  Matrix t(2, 2);
  t(0, 0) = 1;
  t(0, 1) = 2;
  t(1, 1) = 1;
  OOperator pushed =
      push_forward(sl2_automorphism(t), sl2, sl2, r_to_operator(sl2, he_solution())).pushed;
  ok = ok && induced_cocycle_check(pushed).holds;
  report(2, "rank-one fixture: operator grids, induced brackets, closed pairing form", ok);
}

void criterion_3() {
  bool ok = true;
  // every nondegenerate skew array on the two-dimensional fixtures
  for (const Rational& a :
       {Rational(1), Rational(-1), Rational(2), make_rat(1, 2), Rational(3)}) {
    for (const LieAlgebra& l : {LieAlgebra::abelian(2), LieAlgebra::borel2()}) {
      DrinfeldReport rep = drinfeld_equivalence(l, skew_pair(0, 1, a, 2));
      ok = ok && rep.equivalence_agrees && rep.pairing_identity_holds;
    }
  }
  // invertible skew arrays in dimension four, solutions or not
  Rng rng(31337);
  LieAlgebra gl2 = LieAlgebra::gl2();
  int nonsolutions = 0;
  for (int t = 0; t < 6; ++t) {
    Matrix m = rng.skew_invertible(4);
    DrinfeldReport rep = drinfeld_equivalence(gl2, m.to_tensor());
    ok = ok && rep.equivalence_agrees && rep.pairing_identity_holds;
    if (!rep.cybe_holds) ++nonsolutions;
  }
  ok = ok && nonsolutions > 0;
  // the pairing identity entrywise on fifty random skew arrays
  LieAlgebra sl2 = LieAlgebra::sl2();
  for (int t = 0; t < 50; ++t) {
    Tensor r = rng.skew_tensor(3);
    Tensor c3 = cybe_defect(sl2, r);
    Tensor od = o_equation_defect(r_to_operator(sl2, r));
    for (int a = 0; a < 3 && ok; ++a)
      for (int b = 0; b < 3 && ok; ++b)
        for (int w = 0; w < 3; ++w)
          if (-od.at({a, b, w}) != c3.at({a, b, w})) {
            ok = false;
            break;
          }
  }
  report(3, "closedness of the inverse form tracks the commutator sum; exact pairing", ok);
}

void criterion_4() {
  bool ok = true;
  Rng rng(97531);
  int homs = 0;
  // random maps between abelian fixtures
  for (int t = 0; t < 8; ++t) {
    LieAlgebra g = LieAlgebra::abelian(3), h = LieAlgebra::abelian(2);
    PushForwardReport rep =
        push_forward(rng.matrix(2, 3), g, h, r_to_operator(g, rng.skew_tensor(3)));
    ok = ok && rep.o_equation_holds && rep.intertwining_holds && rep.dual_homomorphism_holds;
    ++homs;
  }
  // conjugation automorphisms of the rank-one fixture
  LieAlgebra sl2 = LieAlgebra::sl2();
  OOperator o = r_to_operator(sl2, he_solution());
  for (int t = 0; t < 6; ++t) {
    Matrix phi = sl2_automorphism(rng.invertible(2));
    PushForwardReport rep = push_forward(phi, sl2, sl2, o);
    ok = ok && rep.o_equation_holds && rep.intertwining_holds && rep.dual_homomorphism_holds;
    ++homs;
  }
  // inclusion of the solvable subalgebra, several operator scalings
  LieAlgebra b2 = LieAlgebra::borel2();
  Matrix incl(3, 2);
  incl(0, 0) = 1;
  incl(1, 1) = 1;
  for (const Rational& a : {Rational(1), Rational(2), Rational(-1)}) {
    PushForwardReport rep =
        push_forward(incl, b2, sl2, r_to_operator(b2, skew_pair(0, 1, a, 2)));
    ok = ok && rep.o_equation_holds && rep.intertwining_holds && rep.dual_homomorphism_holds;
    ++homs;
  }
  // zero maps
  for (int t = 0; t < 3; ++t) {
    PushForwardReport rep = push_forward(Matrix(3, 3), sl2, sl2, o);
    ok = ok && rep.o_equation_holds;
    ++homs;
  }
  ok = ok && homs >= 20;
  report(4, "transport along twenty homomorphisms preserves everything", ok);
}

void criterion_5() {
  LieAlgebra sl2 = LieAlgebra::sl2();
  Tensor r = he_solution();
  PoissonStructure lin = linear_poisson(sl2);
  PoissonStructure quad = quadratic_poisson(sl2, r);
  bool ok = lin.jacobi_holds() && quad.jacobi_holds();
  ok = ok && all_zero(compatibility_defect(lin, quad));

  // invertible operator on the solvable fixture: full triple
  LieAlgebra b2 = LieAlgebra::borel2();
  Tensor r2 = skew_pair(0, 1, Rational(1), 2);
  OOperator o2 = r_to_operator(b2, r2);
  PoissonStructure lin2 = linear_poisson(b2);
  PoissonStructure quad2 = quadratic_poisson(b2, r2);
  PoissonStructure con2 = constant_poisson(b2, inverse_pairing_form(o2));
  ok = ok && con2.jacobi_holds() && lin2.jacobi_holds() && quad2.jacobi_holds();
  ok = ok && all_zero(compatibility_defect(con2, lin2));
  ok = ok && all_zero(compatibility_defect(con2, quad2));
  ok = ok && all_zero(compatibility_defect(lin2, quad2));

  Poly cas(3);
  cas.add_term({2, 0, 0}, Rational(1));
  cas.add_term({0, 1, 1}, Rational(4));
  ok = ok && all_zero(casimir_defect(lin, cas));
  ok = ok && all_zero(coadjoint_invariant_defect(sl2, cas));
  ok = ok && all_zero(casimir_defect(quad, cas));
  report(5, "linear, quadratic and constant brackets with casimirs and compatibility", ok);
}

void criterion_6() {
  bool ok = true;
  LieAlgebra sl2 = LieAlgebra::sl2();
  LieAlgebra b2 = LieAlgebra::borel2();
  LieAlgebra gl2 = LieAlgebra::gl2();
  LieAlgebra ab3 = LieAlgebra::abelian(3);
  for (const LieAlgebra* l : {&sl2, &b2, &gl2, &ab3})
    ok = ok &&
         all_zero(infinitesimal_action_defect(*l, linear_poisson(*l), nullptr,
                                              ActionMode::linear));
  // affine mode: zero form everywhere, every closed elementary form, and a
  // fractional form on the solvable fixture
  for (const LieAlgebra* l : {&sl2, &b2, &gl2, &ab3}) {
    int n = l->dim();
    Matrix zero(n, n);
    ok = ok && all_zero(infinitesimal_action_defect(*l, affine_poisson(*l, zero), nullptr,
                                                    ActionMode::affine, &zero));
    for (int a = 0; a < n; ++a)
      for (int bidx = a + 1; bidx < n; ++bidx) {
        Matrix m(n, n);
        m(a, bidx) = 1;
        m(bidx, a) = -1;
        if (!cocycle_defect_of_form(*l, m).is_zero()) continue;
        ok = ok && all_zero(infinitesimal_action_defect(*l, affine_poisson(*l, m), nullptr,
                                                        ActionMode::affine, &m));
      }
  }
  // quadratic mode with verified arrays
  auto quad_mode = [&](const LieAlgebra& l, const Tensor& r) {
    PoissonStructure quad = quadratic_poisson(l, r);
    AlgebraOnModule dual = induced_bracket(r_to_operator(l, r));
    return all_zero(infinitesimal_action_defect(l, quad, &dual, ActionMode::quadratic));
  };
  ok = ok && quad_mode(sl2, he_solution());
  ok = ok && quad_mode(b2, skew_pair(0, 1, Rational(1), 2));
  Tensor rgl = skew_pair(0, 1, Rational(1), 4);  // solvable pair inside dimension four
  ok = ok && o_equation_defect(r_to_operator(gl2, rgl)).is_zero();
  ok = ok && quad_mode(gl2, rgl);
  report(6, "infinitesimal action criterion in linear, affine and quadratic modes", ok);
}

void criterion_7() {
  LieAlgebra sl2 = LieAlgebra::sl2();
  Representation fund = Representation::sl2_fundamental(sl2);
  Tensor r = he_solution();
  ClebschMap phi = clebsch_map(fund);
  bool ok =
      all_zero(hamiltonian_map_defect(phi, linear_poisson(sl2), symplectic_bracket(2)));
  PoissonStructure quad_phase = quadratic_phase_bracket(fund, r);
  ok = ok && all_zero(hamiltonian_map_defect(phi, quadratic_poisson(sl2, r), quad_phase));
  ok = ok && quad_phase.jacobi_holds();
  ok = ok && all_zero(compatibility_defect(quad_phase, symplectic_bracket(2)));
  ok = ok && all_zero(phase_action_defect(fund, r));
  ok = ok && phase_swap_symmetry_holds(fund, r);
  report(7, "phase-space models: both map regimes, bracket laws, action, swap symmetry", ok);
}

void criterion_8() {
  bool ok = true;
  for (const Rational& mu : {Rational(0), Rational(1), make_rat(1, 2)}) {
    DiffPair j = gmu_jacobi_defect(mu);
    ok = ok && im_partial_test(j.first) && im_partial_test(j.second);
    ok = ok && im_partial_test(gmu_omega_cocycle_defect(mu));
    ok = ok && im_partial_test(gmu_capital_omega_cocycle_defect(mu));
  }
  for (auto [mu, eps] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1), Rational(2)}, {Rational(0), Rational(0)},
           {make_rat(1, 2), make_rat(1, 3)}}) {
    DiffOpMatrix o = gmu_o_operator(eps);
    ok = ok && o.adjoint() == -o;
    ok = ok && o * gmu_o_inverse(eps) == DiffOpMatrix::identity(2);
    ok = ok && gmu_o_inverse(eps) * o == DiffOpMatrix::identity(2);
    GmuDualIsoReport iso = gmu_dual_iso(mu, eps);
    ok = ok && iso.matches_relabeled_family && iso.third_order_coefficient_exact;
  }
  Sym u = diffsym("u");
  ok = ok && d1_casimir_check(DiffPoly::jet(u, 0, make_rat(1, 2)));

  HamiltonianTriple t = gmu_hamiltonian_triple(Rational(1), Rational(2));
  ok = ok && t.b0.adjoint() == -t.b0 && t.b1.adjoint() == -t.b1 && t.b2.adjoint() == -t.b2;
  ok = ok && im_partial_test(diff_jacobi_sum(t.b0)) && im_partial_test(diff_jacobi_sum(t.b1)) &&
       im_partial_test(diff_jacobi_sum(t.b2));
  ok = ok && im_partial_test(diff_compat_sum(t.b0, t.b1)) &&
       im_partial_test(diff_compat_sum(t.b0, t.b2)) &&
       im_partial_test(diff_compat_sum(t.b1, t.b2));
  report(8, "differential family: identities, dual isomorphism, operator triple", ok);
}

void criterion_9() {
  bool ok = true;
  LieAlgebra sl2 = LieAlgebra::sl2();
  Rng rng(4242);
  Rank3 heis(3, 3, 3);
  heis.at(0, 1, 2) = 1;
  heis.at(1, 0, 2) = -1;
  const Rank3 bases[3] = {Rank3(3, 3, 3), sl2.c(), heis};
  int agreements = 0, lie_failures = 0;
  for (int t = 0; t < 51; ++t) {
    Rank3 d = transport_bracket(bases[t % 3], rng.invertible(3));
    if (!bracket_jacobi_defect(d).is_zero()) continue;
    CrossedReport rep = crossed_bracket(sl2, d);
    if (rep.direct_holds != rep.quadrilinear_holds) ok = false;
    if (!rep.direct_holds) ++lie_failures;
    ++agreements;
  }
  ok = ok && agreements >= 50 && lie_failures > 0;

  LieAlgebra ab = LieAlgebra::abelian(3);
  CrossedCocycleReport c1 = symplectic_cocycle_on_crossed(crossed_bracket(ab, Rank3(3, 3, 3)).d);
  CrossedCocycleReport c2 = symplectic_cocycle_on_crossed(crossed_bracket(sl2, Rank3(3, 3, 3)).d);
  CrossedCocycleReport c3 = symplectic_cocycle_on_crossed(crossed_bracket(ab, sl2.c()).d);
  ok = ok && c1.holds && !c2.holds && !c3.holds;

  CocycleCriterionReport coad = symplectic_cocycle_criterion(sl2, Representation::coadjoint(sl2));
  ok = ok && !coad.direct_holds && coad.direct_holds == coad.criterion_holds;
  BilinearProduct m2 = BilinearProduct::matrix_units(2);
  LieAlgebra gl2 = LieAlgebra::gl2();
  CocycleCriterionReport lm = symplectic_cocycle_criterion(gl2, left_mult_dual(gl2, m2));
  ok = ok && lm.direct_holds && lm.criterion_holds;

  SymplecticDoubleResult dd = symplectic_double(m2);
  ok = ok && quasiassociative_check(dd.doubled).quasiassociative;
  OFromSymplecticReport self = o_from_symplectic(gl2, left_mult_dual(gl2, m2));
  ok = ok && self.skew && self.o_equation_holds && self.matches_closed_form && self.self_dual;
  report(9, "mixed brackets, closedness equivalences, doubles and self-duality", ok);
}

void criterion_10(const std::string& bin, const std::string& fixtures) {
  bool ok = true;
  for (const char* name : {"sl2", "gmu", "gl2-double", "clebsch-sl2"}) {
    std::string base = fixtures + "/" + name + ".json";
    std::string out1 = std::string("acc_") + name + "_1.json";
    std::string out2 = std::string("acc_") + name + "_2.json";
    int code1 = run_cli(bin + " run " + base + " --json " + out1 + " > /dev/null");
    int code2 = run_cli(bin + " run " + base + " --json " + out2 + " > /dev/null");
    if (code1 != 0 || code2 != 0) {
      std::printf("  fixture %s exited with %d/%d\n", name, code1, code2);
      ok = false;
      continue;
    }
    std::string a = slurp(out1), b = slurp(out2);
    if (a.empty() || a != b) {
      std::printf("  fixture %s report not byte-identical\n", name);
      ok = false;
    }
    std::remove(out1.c_str());
    std::remove(out2.c_str());
  }
  // corrupted manifest: truncated JSON
  std::ofstream bad("acc_corrupt.json", std::ios::binary);
  bad << "{\"schema\": \"omatrix/1\", \"checks\": [\"jacobi\"";
  bad.close();
  int code = run_cli(bin + " run acc_corrupt.json > /dev/null 2>&1");
  if (code != 2) {
    std::printf("  corrupted manifest exited with %d, expected 2\n", code);
    ok = false;
  }
  std::remove("acc_corrupt.json");
  if (run_cli(bin + " explain nosuch > /dev/null 2>&1") != 2) {
    std::printf("  unknown check name did not exit with 2\n");
    ok = false;
  }
  if (run_cli(bin + " list-checks > /dev/null") != 0) {
    std::printf("  catalog listing failed\n");
    ok = false;
  }
  report(10, "bundled fixtures exit 0 with byte-identical reports; corrupt input exits 2",
         ok);
}

}  // namespace

int main(int argc, char** argv) {
  std::string bin = argc > 1 ? argv[1] : "./omatrix";
  std::string fixtures = argc > 2 ? argv[2] : "fixtures";
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(bin, fixtures);
  if (g_failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria failed\n", g_failures);
  return g_failures;
}
