#include "omatrix/checks.hpp"

#include <chrono>

#include "omatrix/clebsch.hpp"
#include "omatrix/gmu.hpp"
#include "omatrix/poisson.hpp"
#include "omatrix/random.hpp"
#include "omatrix/yang_baxter.hpp"

namespace omatrix {

namespace {

CheckResult pass(const std::string& name, const std::string& detail = "") {
  return CheckResult{name, Verdict::pass, detail, {}, 0.0};
}

CheckResult skip(const std::string& name, const std::string& detail) {
  return CheckResult{name, Verdict::skipped, detail, {}, 0.0};
}

CheckResult judge(const std::string& name, const Tensor& defect, const CheckContext& ctx,
                  const std::string& detail = "") {
  CheckResult r{name, defect.is_zero() ? Verdict::pass : Verdict::fail, detail, {}, 0.0};
  if (!defect.is_zero())
    fill_witness(r, defect, static_cast<std::size_t>(ctx.options.witness_limit));
  return r;
}

CheckResult judge_bool(const std::string& name, bool ok, const std::string& detail = "") {
  return CheckResult{name, ok ? Verdict::pass : Verdict::fail, detail, {}, 0.0};
}

Tensor poly_defect_tensor(const std::vector<Poly>& polys) {
  // summarizes which flattened entries are nonzero, for witnesses
  int n = static_cast<int>(polys.size());
  Tensor t({n < 1 ? 1 : n});
  for (int i = 0; i < n; ++i)
    if (!polys[i].is_zero()) t.set({i}, Rational(1));
  return t;
}

bool all_zero(const std::vector<Poly>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

bool is_sl2_pattern(const LieAlgebra& l) {
  return l.dim() == 3 && l.c() == LieAlgebra::sl2().c();
}

// ----- structural checks on built-in instances -------------------------------

CheckResult check_artin_builtin(CheckContext& ctx) {
  for (int d = 2; d <= 4; ++d)
    if (!check_artin(permutation_operator(d)).holds)
      return judge_bool("artin", false, "permutation operator failed the braid relation");
  Rng rng(ctx.options.seed + 1);
  Matrix s = rng.matrix(4, 4);
  YBReport rep = check_artin(s);
  return pass("artin", std::string("permutation passes dims 2-4; random defect ") +
                           (rep.holds ? "zero" : "nonzero"));
}

CheckResult check_qybe_builtin(CheckContext& ctx) {
  (void)ctx;
  for (int d = 2; d <= 3; ++d) {
    if (!check_qybe(Matrix::identity(d * d)).holds)
      return judge_bool("qybe", false, "identity failed the triple relation");
    if (!check_qybe(permutation_operator(d)).holds)
      return judge_bool("qybe", false, "permutation failed the triple relation");
  }
  return pass("qybe", "identity and permutation pass in dims 2 and 3");
}

CheckResult check_mirror(CheckContext& ctx) {
  (void)ctx;
  for (int d = 2; d <= 4; ++d) {
    Matrix p12 = embed_pair(permutation_operator(d), Slot::s12, d);
    Matrix p23 = embed_pair(permutation_operator(d), Slot::s23, d);
    Matrix m = mirror_operator(d);
    if (p23 * p12 * p23 != m || p12 * p23 * p12 != m)
      return judge_bool("mirror-factorization", false, "factorizations disagree at dim " +
                                                           std::to_string(d));
  }
  return pass("mirror-factorization", "both adjacent-swap factorizations agree, dims 2-4");
}

CheckResult check_embedding(CheckContext& ctx) {
  Rng rng(ctx.options.seed + 2);
  for (int d = 2; d <= 3; ++d) {
    Matrix p12 = embed_pair(permutation_operator(d), Slot::s12, d);
    Matrix p23 = embed_pair(permutation_operator(d), Slot::s23, d);
    for (int t = 0; t < 3; ++t) {
      Matrix a = rng.matrix(d * d, d * d);
      Matrix a12 = embed_pair(a, Slot::s12, d);
      Matrix a13 = embed_pair(a, Slot::s13, d);
      Matrix a23 = embed_pair(a, Slot::s23, d);
      bool ok = a12 * p23 == p23 * a13 && a13 * p23 == p23 * a12 &&
                a23 * p12 == p12 * a13 && a13 * p12 == p12 * a23;
      if (!ok) return judge_bool("embedding-identities", false, "slot-swap identity failed");
    }
    // scalar factor acts as the identity under the product
    Tensor one({1, 1});
    one.set({0, 0}, Rational(1));
    Tensor t = rng.matrix(d, d).to_tensor();
    if (!(tensor_product(one, t).nnz() == t.nnz()))
      return judge_bool("embedding-identities", false, "unit tensor product failed");
  }
  return pass("embedding-identities", "slot-swap identities hold for random operators");
}

CheckResult check_quasiclassical(CheckContext& ctx) {
  Rng rng(ctx.options.seed + 3);
  Matrix r = rng.matrix(4, 4);
  Matrix zero(4, 4);
  Matrix first = quasiclassical_defect(HSeries(Matrix::identity(4), r, zero));
  for (int t = 0; t < 10; ++t) {
    Matrix rho = rng.matrix(4, 4);
    if (quasiclassical_defect(HSeries(Matrix::identity(4), r, rho)) != first)
      return judge_bool("quasiclassical-cybe", false, "second-order term leaked through");
  }
  if (first != cybe_operator_defect(r, 2))
    return judge_bool("quasiclassical-cybe", false, "three-commutator mismatch");
  return pass("quasiclassical-cybe",
              "order-two coefficient equals the commutator sum, independent of rho");
}

CheckResult check_artin_quasi(CheckContext& ctx) {
  Rng rng(ctx.options.seed + 4);
  Matrix p = permutation_operator(2);
  if (!check_artin_quasiclassical(Matrix(4, 4)).holds)
    return judge_bool("artin-quasiclassical", false, "zero perturbation failed");
  if (!check_artin_quasiclassical(p).holds)
    return judge_bool("artin-quasiclassical", false, "transported identity failed");
  for (int t = 0; t < 4; ++t) {
    Matrix r = rng.matrix(4, 4);
    YBReport rep = check_artin_quasiclassical(p * r);
    if (Matrix::from_tensor(rep.defect) != mirror_operator(2) * cybe_operator_defect(r, 2))
      return judge_bool("artin-quasiclassical", false,
                        "defect is not the mirrored commutator sum");
  }
  return pass("artin-quasiclassical", "defect equals the mirrored three-commutator sum");
}

CheckResult check_unitarity(CheckContext& ctx) {
  Rng rng(ctx.options.seed + 5);
  Matrix p = permutation_operator(2);
  for (int t = 0; t < 5; ++t) {
    Matrix b = rng.matrix(4, 4);
    Matrix r = b - p * b * p;
    UnitarityReport rep = unitarity_implies_skewness(HSeries(p, p * r, rng.matrix(4, 4)));
    if (!rep.hypothesis || !rep.conclusion)
      return judge_bool("unitarity-skewness", false, "skewness did not follow");
  }
  return pass("unitarity-skewness", "first-order unitary perturbations are skew");
}

// ----- algebra checks driven by the manifest ---------------------------------

CheckResult check_jacobi(CheckContext& ctx) {
  return judge("jacobi", bracket_jacobi_defect(ctx.algebra().c()), ctx);
}

CheckResult check_coadjoint(CheckContext& ctx) {
  const LieAlgebra& l = ctx.algebra();
  Representation coad = Representation::coadjoint(l);
  for (int i = 0; i < l.dim(); ++i)
    if (coad.matrix_of(i) != -l.ad(i).transpose())
      return judge_bool("coadjoint-rep", false, "matrices are not negative transposes");
  return judge("coadjoint-rep", coad.defect(), ctx);
}

CheckResult check_roundtrip(CheckContext& ctx) {
  const LieAlgebra& l = ctx.algebra();
  Rng rng(ctx.options.seed + 6);
  for (int t = 0; t < 25; ++t) {
    Tensor r = rng.matrix(l.dim(), l.dim()).to_tensor();
    OOperator o = r_to_operator(l, r);
    if (!(operator_to_r(o) == r))
      return judge_bool("r-operator-roundtrip", false, "conversion is not involutive");
    if (o.is_skew() != Matrix::from_tensor(r).is_skew())
      return judge_bool("r-operator-roundtrip", false, "skewness flag mismatch");
  }
  return pass("r-operator-roundtrip", "conversions are mutually inverse on random arrays");
}

CheckResult check_cybe(CheckContext& ctx) {
  return judge("cybe", cybe_defect(ctx.algebra(), ctx.r()), ctx);
}

CheckResult check_o_operator(CheckContext& ctx) {
  if (!ctx.manifest.o_operator) throw InputError("check o-operator: o_operator missing");
  OOperator o{ctx.module(), ctx.algebra(), *ctx.manifest.o_operator};
  return judge("o-operator", o_equation_defect(o), ctx);
}

CheckResult check_induced_bracket(CheckContext& ctx) {
  if (!ctx.o_operator_verified())
    return skip("induced-bracket", "prerequisite failed: o-operator");
  OOperator o{ctx.module(), ctx.algebra(), *ctx.manifest.o_operator};
  AlgebraOnModule m = induced_bracket(o);
  return judge("induced-bracket", bracket_jacobi_defect(m.bracket), ctx);
}

CheckResult check_dual_cocycle(CheckContext& ctx) {
  if (!ctx.r_verified()) return skip("dual-cocycle", "prerequisite failed: operator equation");
  YBReport rep = induced_cocycle_check(r_to_operator(ctx.algebra(), ctx.r()));
  return judge("dual-cocycle", rep.defect, ctx);
}

CheckResult check_drinfeld(CheckContext& ctx) {
  DrinfeldReport rep = drinfeld_equivalence(ctx.algebra(), ctx.r());
  std::string detail = std::string("closedness ") + (rep.cocycle_holds ? "holds" : "fails") +
                       ", commutator sum " + (rep.cybe_holds ? "vanishes" : "is nonzero");
  return judge_bool("drinfeld-equivalence",
                    rep.equivalence_agrees && rep.pairing_identity_holds, detail);
}

CheckResult check_push_forward(CheckContext& ctx) {
  Rng rng(ctx.options.seed + 7);
  // random maps between abelian fixtures carry any skew operator
  for (int t = 0; t < 5; ++t) {
    LieAlgebra g = LieAlgebra::abelian(3), h = LieAlgebra::abelian(2);
    OOperator o = r_to_operator(g, rng.skew_tensor(3));
    PushForwardReport rep = push_forward(rng.matrix(2, 3), g, h, o);
    if (!rep.o_equation_holds || !rep.intertwining_holds || !rep.dual_homomorphism_holds)
      return judge_bool("push-forward", false, "transport failed on abelian fixtures");
  }
  // inclusion of the solvable subalgebra into the rank-one fixture
  LieAlgebra b2 = LieAlgebra::borel2();
  LieAlgebra sl2 = LieAlgebra::sl2();
  Matrix incl(3, 2);
  incl(0, 0) = 1;
  incl(1, 1) = 1;
  Tensor r2({2, 2});
  r2.set({0, 1}, Rational(1));
  r2.set({1, 0}, Rational(-1));
  PushForwardReport rep = push_forward(incl, b2, sl2, r_to_operator(b2, r2));
  if (!rep.o_equation_holds || !rep.intertwining_holds || !rep.dual_homomorphism_holds)
    return judge_bool("push-forward", false, "transport failed along the inclusion");
  return pass("push-forward", "transported operators satisfy the equation and dual maps");
}

// ----- polynomial bracket checks ---------------------------------------------

CheckResult check_linear_poisson(CheckContext& ctx) {
  PoissonStructure p = linear_poisson(ctx.algebra());
  return judge_bool("linear-poisson", p.jacobi_holds(), "triple identity on coordinates");
}

CheckResult check_quadratic_poisson(CheckContext& ctx) {
  if (!ctx.r_verified())
    return skip("quadratic-poisson", "prerequisite failed: operator equation");
  const LieAlgebra& l = ctx.algebra();
  PoissonStructure quad = quadratic_poisson(l, ctx.r());
  // independent route: pairing of coadjoint fields through the operator
  Matrix rm = Matrix::from_tensor(ctx.r());
  for (int i = 0; i < l.dim(); ++i) {
    std::vector<Poly> ai = coadjoint_field(l, i);
    for (int j = 0; j < l.dim(); ++j) {
      std::vector<Poly> aj = coadjoint_field(l, j);
      std::vector<Poly> oaj(l.dim(), Poly(l.dim()));
      for (int s = 0; s < l.dim(); ++s)
        for (int t = 0; t < l.dim(); ++t)
          if (rm(s, t) != 0) oaj[s] = oaj[s] + aj[t].scaled(rm(s, t));
      Poly pairing(l.dim());
      for (int s = 0; s < l.dim(); ++s) pairing = pairing + ai[s] * oaj[s];
      if (quad.pi(i, j) != pairing)
        return judge_bool("quadratic-poisson", false, "coordinate formula route mismatch");
    }
  }
  return judge_bool("quadratic-poisson", quad.jacobi_holds(),
                    "coordinate formula matches the pairing route");
}

CheckResult check_affine_poisson(CheckContext& ctx) {
  const LieAlgebra& l = ctx.algebra();
  int n = l.dim();
  int closed = 0, refused = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Matrix m(n, n);
      m(a, b) = 1;
      m(b, a) = -1;
      if (cocycle_defect_of_form(l, m).is_zero()) {
        if (!affine_poisson(l, m).jacobi_holds())
          return judge_bool("affine-poisson", false, "closed form gave a broken bracket");
        ++closed;
      } else {
        try {
          affine_poisson(l, m);
          return judge_bool("affine-poisson", false, "non-closed form was not refused");
        } catch (const std::invalid_argument&) {
          ++refused;
        }
      }
    }
  return pass("affine-poisson", std::to_string(closed) + " closed forms accepted, " +
                                    std::to_string(refused) + " refused");
}

CheckResult check_poisson_jacobi(CheckContext& ctx) {
  std::vector<Poly> defect = linear_poisson(ctx.algebra()).jacobi_defect();
  if (ctx.manifest.r_matrix && ctx.r_verified()) {
    std::vector<Poly> q = quadratic_poisson(ctx.algebra(), ctx.r()).jacobi_defect();
    defect.insert(defect.end(), q.begin(), q.end());
  }
  return judge("poisson-jacobi", poly_defect_tensor(defect), ctx,
               all_zero(defect) ? "all coordinate triples vanish" : "");
}

CheckResult check_compatibility(CheckContext& ctx) {
  const LieAlgebra& l = ctx.algebra();
  PoissonStructure lin = linear_poisson(l);
  if (!ctx.manifest.r_matrix || !ctx.r_verified())
    return skip("poisson-compatibility", "prerequisite failed: verified r_matrix");
  PoissonStructure quad = quadratic_poisson(l, ctx.r());
  if (!all_zero(compatibility_defect(lin, quad)))
    return judge_bool("poisson-compatibility", false, "linear and quadratic disagree");
  OOperator o = r_to_operator(l, ctx.r());
  std::string detail = "linear and quadratic compatible";
  if (o.m.inverse()) {
    PoissonStructure constant = constant_poisson(l, inverse_pairing_form(o));
    if (!all_zero(compatibility_defect(constant, lin)) ||
        !all_zero(compatibility_defect(constant, quad)))
      return judge_bool("poisson-compatibility", false, "constant bracket incompatible");
    detail = "constant, linear, quadratic pairwise compatible";
  }
  return pass("poisson-compatibility", detail);
}

CheckResult check_casimir(CheckContext& ctx) {
  const LieAlgebra& l = ctx.algebra();
  PoissonStructure lin = linear_poisson(l);
  Poly one = Poly::constant(l.dim(), Rational(1));
  if (!all_zero(casimir_defect(lin, one)))
    return judge_bool("casimir", false, "constants must be casimirs");
  if (is_sl2_pattern(l)) {
    Poly cas(3);
    cas.add_term({2, 0, 0}, Rational(1));
    cas.add_term({0, 1, 1}, Rational(4));
    if (!all_zero(casimir_defect(lin, cas)))
      return judge_bool("casimir", false, "quadratic invariant is not a casimir");
    if (!all_zero(coadjoint_invariant_defect(l, cas)))
      return judge_bool("casimir", false, "quadratic invariant is not coadjoint-invariant");
    if (ctx.manifest.r_matrix && ctx.r_verified()) {
      PoissonStructure quad = quadratic_poisson(l, ctx.r());
      if (!all_zero(casimir_defect(quad, cas)))
        return judge_bool("casimir", false, "invariant fails on the quadratic bracket");
    }
    return pass("casimir", "quadratic invariant annihilates the brackets");
  }
  return pass("casimir", "constants are casimirs");
}

CheckResult check_action(CheckContext& ctx) {
  const LieAlgebra& l = ctx.algebra();
  PoissonStructure lin = linear_poisson(l);
  if (!all_zero(infinitesimal_action_defect(l, lin, nullptr, ActionMode::linear)))
    return judge_bool("infinitesimal-action", false, "linear mode defect nonzero");
  Matrix zero(l.dim(), l.dim());
  if (!all_zero(infinitesimal_action_defect(l, affine_poisson(l, zero), nullptr,
                                            ActionMode::affine, &zero)))
    return judge_bool("infinitesimal-action", false, "affine mode defect nonzero");
  std::string detail = "linear and affine modes vanish";
  if (ctx.manifest.r_matrix && ctx.r_verified()) {
    PoissonStructure quad = quadratic_poisson(l, ctx.r());
    AlgebraOnModule dual = induced_bracket(r_to_operator(l, ctx.r()));
    if (!all_zero(infinitesimal_action_defect(l, quad, &dual, ActionMode::quadratic)))
      return judge_bool("infinitesimal-action", false, "quadratic mode defect nonzero");
    detail = "linear, affine and quadratic modes vanish";
  }
  return pass("infinitesimal-action", detail);
}

// ----- phase-space checks -----------------------------------------------------

CheckResult check_clebsch_map(CheckContext& ctx) {
  ClebschMap phi = clebsch_map(ctx.module());
  std::vector<Poly> defect =
      hamiltonian_map_defect(phi, linear_poisson(ctx.algebra()),
                             symplectic_bracket(ctx.module().dim_v()));
  return judge("clebsch-map", poly_defect_tensor(defect), ctx,
               all_zero(defect) ? "linear bracket maps onto the canonical one" : "");
}

CheckResult check_symplectic(CheckContext& ctx) {
  (void)ctx;
  for (int dv = 1; dv <= 3; ++dv) {
    PoissonStructure s = symplectic_bracket(dv);
    if (!s.jacobi_holds())
      return judge_bool("symplectic-bracket", false, "triple identity failed");
    for (int a = 0; a < dv; ++a)
      if (s.pi(a, dv + a) != Poly::constant(2 * dv, Rational(1)))
        return judge_bool("symplectic-bracket", false, "canonical pairing wrong");
  }
  return pass("symplectic-bracket", "canonical pairs in dims 1-3");
}

CheckResult check_phase_bracket(CheckContext& ctx) {
  if (!ctx.r_verified())
    return skip("quadratic-phase-bracket", "prerequisite failed: operator equation");
  PoissonStructure quad = quadratic_phase_bracket(ctx.module(), ctx.r());
  bool compat = all_zero(compatibility_defect(quad, symplectic_bracket(ctx.module().dim_v())));
  return judge_bool("quadratic-phase-bracket", quad.jacobi_holds() && compat,
                    "triple identity and compatibility with the canonical bracket");
}

CheckResult check_hamiltonian_map(CheckContext& ctx) {
  if (!ctx.r_verified())
    return skip("hamiltonian-map", "prerequisite failed: operator equation");
  const LieAlgebra& l = ctx.algebra();
  const Representation& chi = ctx.module();
  ClebschMap phi = clebsch_map(chi);
  bool lin_ok = all_zero(
      hamiltonian_map_defect(phi, linear_poisson(l), symplectic_bracket(chi.dim_v())));
  bool quad_ok = all_zero(hamiltonian_map_defect(phi, quadratic_poisson(l, ctx.r()),
                                                 quadratic_phase_bracket(chi, ctx.r())));
  return judge_bool("hamiltonian-map", lin_ok && quad_ok,
                    "linear-to-canonical and quadratic-to-quadratic");
}

CheckResult check_dual_rep(CheckContext& ctx) {
  Representation d = dual_representation(ctx.module());
  if (!d.is_valid()) return judge_bool("dual-representation", false, "dual is not a module");
  std::string detail = "negative transpose is a module";
  if (ctx.manifest.r_matrix && ctx.r_verified()) {
    if (!phase_swap_symmetry_holds(ctx.module(), ctx.r()))
      return judge_bool("dual-representation", false, "coordinate swap symmetry failed");
    detail += "; coordinate swap maps the bracket family to itself";
  }
  return pass("dual-representation", detail);
}

CheckResult check_phase_action(CheckContext& ctx) {
  if (!ctx.r_verified())
    return skip("phase-action", "prerequisite failed: operator equation");
  std::vector<Poly> defect = phase_action_defect(ctx.module(), ctx.r());
  return judge("phase-action", poly_defect_tensor(defect), ctx,
               all_zero(defect) ? "criterion vanishes on phase coordinates" : "");
}

// ----- doubles ----------------------------------------------------------------

CheckResult check_crossed(CheckContext& ctx) {
  const LieAlgebra& l = ctx.algebra();
  int n = l.dim();
  CrossedReport zero = crossed_bracket(l, Rank3(n, n, n));
  if (zero.direct_holds != zero.quadrilinear_holds)
    return judge_bool("crossed-bracket", false, "verdicts disagree with the zero dual");
  if (zero.direct_holds && !zero.pairing_ad_invariant)
    return judge_bool("crossed-bracket", false, "sum pairing is not invariant");
  if (ctx.manifest.r_matrix && ctx.r_verified()) {
    AlgebraOnModule dual = induced_bracket(r_to_operator(l, ctx.r()));
    CrossedReport rep = crossed_bracket(l, dual.bracket);
    if (!rep.direct_holds || !rep.quadrilinear_holds || !rep.pairing_ad_invariant)
      return judge_bool("crossed-bracket", false, "operator-induced dual failed");
  }
  return pass("crossed-bracket", "direct and quadrilinear verdicts agree");
}

CheckResult check_crossed_cocycle(CheckContext& ctx) {
  const LieAlgebra& l = ctx.algebra();
  int n = l.dim();
  LieAlgebra ab = LieAlgebra::abelian(n);
  CrossedCocycleReport both =
      symplectic_cocycle_on_crossed(crossed_bracket(ab, Rank3(n, n, n)).d);
  if (!both.holds)
    return judge_bool("crossed-symplectic-cocycle", false, "abelian case must close");
  CrossedCocycleReport manifest_case =
      symplectic_cocycle_on_crossed(crossed_bracket(l, Rank3(n, n, n)).d);
  bool expected = manifest_case.algebra_abelian;  // dual half is abelian here
  return judge_bool("crossed-symplectic-cocycle", manifest_case.holds == expected,
                    "difference form closes exactly in the doubly abelian case");
}

CheckResult check_semidirect(CheckContext& ctx) {
  const LieAlgebra& l = ctx.algebra();
  Representation rho =
      ctx.manifest.rho ? *ctx.manifest.rho : Representation::coadjoint(l);
  DoubleAlgebra d = semidirect_sum(l, rho);
  return judge("semidirect-sum", bracket_jacobi_defect(d.bracket), ctx);
}

CheckResult check_semidirect_criterion(CheckContext& ctx) {
  const LieAlgebra& l = ctx.algebra();
  Representation rho =
      ctx.manifest.rho ? *ctx.manifest.rho : Representation::coadjoint(l);
  CocycleCriterionReport rep = symplectic_cocycle_criterion(l, rho);
  std::string detail = std::string("closedness ") + (rep.direct_holds ? "holds" : "fails") +
                       " and the dual-representation criterion agrees";
  return judge_bool("semidirect-cocycle-criterion",
                    rep.direct_holds == rep.criterion_holds, detail);
}

CheckResult check_quasiassoc(CheckContext& ctx) {
  if (!ctx.manifest.product) throw InputError("check quasiassociativity: product missing");
  QuasiassocReport rep = quasiassociative_check(*ctx.manifest.product);
  CheckResult r = judge("quasiassociativity", rep.defect, ctx);
  if (r.verdict == Verdict::pass)
    r.detail = rep.commutator_is_lie ? "product is quasiassociative; commutator is Lie"
                                     : "inconsistent commutator";
  return r;
}

CheckResult check_symplectic_double(CheckContext& ctx) {
  if (!ctx.manifest.product) throw InputError("check symplectic-double: product missing");
  QuasiassocReport base = quasiassociative_check(*ctx.manifest.product);
  if (!base.quasiassociative)
    return skip("symplectic-double", "prerequisite failed: quasiassociativity");
  SymplecticDoubleResult d = symplectic_double(*ctx.manifest.product);
  QuasiassocReport again = quasiassociative_check(d.doubled);
  SymplecticDoubleResult dd = symplectic_double(d.doubled);
  return judge_bool("symplectic-double",
                    again.quasiassociative && dd.doubled.dim == 4 * ctx.manifest.product->dim,
                    "double and iterated double are quasiassociative");
}

CheckResult check_o_from_symplectic(CheckContext& ctx) {
  if (!ctx.manifest.product) throw InputError("check o-from-symplectic: product missing");
  QuasiassocReport base = quasiassociative_check(*ctx.manifest.product);
  if (!base.quasiassociative || !base.commutator_is_lie)
    return skip("o-from-symplectic", "prerequisite failed: quasiassociativity");
  LieAlgebra lie = LieAlgebra::from_structure(base.commutator);
  const BilinearProduct& p = *ctx.manifest.product;
  Rank3 chi(p.dim, p.dim, p.dim);
  for (int i = 0; i < p.dim; ++i)
    for (int b = 0; b < p.dim; ++b)
      for (int k = 0; k < p.dim; ++k) chi.at(i, b, k) = -p.m.at(i, k, b);
  OFromSymplecticReport rep = o_from_symplectic(lie, Representation(lie, p.dim, std::move(chi)));
  return judge_bool("o-from-symplectic",
                    rep.skew && rep.o_equation_holds && rep.matches_closed_form && rep.self_dual,
                    "block operator verified; induced dual bracket reproduces the sum");
}

// ----- differential checks ----------------------------------------------------

CheckResult check_im_partial(CheckContext& ctx) {
  (void)ctx;
  DiffPoly u = DiffPoly::var("u");
  bool ok = im_partial_test((u * u).total_derivative()) && !im_partial_test(u) &&
            im_partial_test(gmu_omega_skew_defect()) && im_partial_test(DiffPoly()) &&
            !im_partial_test(DiffPoly::constant(Rational(1)));
  return judge_bool("im-partial", ok, "image membership by the kernel criterion");
}

CheckResult check_variational(CheckContext& ctx) {
  (void)ctx;
  Sym u = diffsym("u");
  DiffPoly uu = DiffPoly::var("u");
  bool ok = (uu * uu).variational_derivative(u) == uu.scaled(Rational(2));
  ok = ok && (uu * DiffPoly::var("u", 2)).variational_derivative(u) ==
                 DiffPoly::var("u", 2).scaled(Rational(2));
  DiffOp skew = DiffOp::mult(uu) * DiffOp::d(1) + DiffOp::d(1) * DiffOp::mult(uu);
  ok = ok && skew.adjoint() == -skew;
  // second-derivative contract on a sample
  DiffPoly h = uu * DiffPoly::var("u", 1) * DiffPoly::var("u", 1) + uu * uu * uu;
  DiffOp d = frechet_derivative(h.variational_derivative(u), u);
  ok = ok && d.adjoint() == d;
  return judge_bool("variational-calculus", ok,
                    "euler operator, adjoints, self-adjoint second derivative");
}

CheckResult check_gmu_jacobi(CheckContext& ctx) {
  Rational mu = ctx.manifest.mu ? *ctx.manifest.mu : Rational(0);
  DiffPair defect = gmu_jacobi_defect(mu);
  return judge_bool("gmu-jacobi",
                    im_partial_test(defect.first) && im_partial_test(defect.second),
                    "triple identity at parameter " + rat_str(mu));
}

CheckResult check_gmu_cocycles(CheckContext& ctx) {
  Rational mu = ctx.manifest.mu ? *ctx.manifest.mu : Rational(0);
  bool ok = im_partial_test(gmu_omega_cocycle_defect(mu)) &&
            im_partial_test(gmu_capital_omega_cocycle_defect(mu)) &&
            im_partial_test(gmu_omega_skew_defect());
  return judge_bool("gmu-cocycles", ok, "degenerate and nondegenerate forms close");
}

CheckResult check_gmu_o(CheckContext& ctx) {
  Rational eps = ctx.manifest.eps ? *ctx.manifest.eps : Rational(0);
  DiffOpMatrix o = gmu_o_operator(eps);
  DiffOpMatrix oinv = gmu_o_inverse(eps);
  bool ok = o.adjoint() == -o && o * oinv == DiffOpMatrix::identity(2) &&
            oinv * o == DiffOpMatrix::identity(2);
  return judge_bool("gmu-o-operator", ok, "skew block operator with exact inverse");
}

CheckResult check_gmu_dual(CheckContext& ctx) {
  Rational mu = ctx.manifest.mu ? *ctx.manifest.mu : Rational(0);
  Rational eps = ctx.manifest.eps ? *ctx.manifest.eps : Rational(0);
  GmuDualIsoReport rep = gmu_dual_iso(mu, eps);
  return judge_bool("gmu-dual-iso",
                    rep.matches_relabeled_family && rep.third_order_coefficient_exact,
                    "dual bracket is the family member at parameter " + rat_str(eps - mu));
}

CheckResult check_d1_linear(CheckContext& ctx) {
  (void)ctx;
  Sym u = diffsym("u");
  DiffPoly sqrt_u = DiffPoly::jet(u, 0, make_rat(1, 2));
  DiffOp factored =
      (DiffOp::mult(sqrt_u) * DiffOp::d(1) * DiffOp::mult(sqrt_u)).scaled(Rational(-2));
  return judge_bool("d1-linear", factored == d1_linear_operator(),
                    "square-root factorization of the line operator");
}

CheckResult check_d1_casimir(CheckContext& ctx) {
  (void)ctx;
  Sym u = diffsym("u");
  DiffPoly casimir = DiffPoly::jet(u, 0, make_rat(1, 2));
  bool ok = d1_casimir_check(casimir) && !d1_casimir_check(DiffPoly::var("u"));
  DiffPoly vd = casimir.variational_derivative(u);
  ok = ok && (vd * vd * DiffPoly::var("u")) == DiffPoly::constant(make_rat(1, 4));
  return judge_bool("d1-casimir", ok, "square root of the field is annihilated");
}

CheckResult check_triple(CheckContext& ctx) {
  Rational mu = ctx.manifest.mu ? *ctx.manifest.mu : Rational(0);
  Rational eps = ctx.manifest.eps ? *ctx.manifest.eps : Rational(0);
  HamiltonianTriple t = gmu_hamiltonian_triple(mu, eps);
  bool skew = t.b0.adjoint() == -t.b0 && t.b1.adjoint() == -t.b1 && t.b2.adjoint() == -t.b2;
  if (!skew) return judge_bool("hamiltonian-triple", false, "an operator is not skew");
  bool jac = im_partial_test(diff_jacobi_sum(t.b0)) && im_partial_test(diff_jacobi_sum(t.b1)) &&
             im_partial_test(diff_jacobi_sum(t.b2));
  if (!jac) return judge_bool("hamiltonian-triple", false, "a triple sum is nonzero");
  bool compat = im_partial_test(diff_compat_sum(t.b0, t.b1)) &&
                im_partial_test(diff_compat_sum(t.b0, t.b2)) &&
                im_partial_test(diff_compat_sum(t.b1, t.b2));
  return judge_bool("hamiltonian-triple", compat,
                    "constant, linear and quadratic operators are pairwise compatible");
}

CheckResult check_map_diff(CheckContext& ctx) {
  (void)ctx;
  Sym u = diffsym("u");
  DiffOpMatrix b1(1, 1);
  b1.at(0, 0) = d1_linear_operator();
  // scaling map: zero defect at factors zero and one, nonzero at two
  for (long lam : {0L, 1L}) {
    auto d = hamiltonian_map_criterion({DiffPoly::var("u").scaled(Rational(lam))}, {u}, {u},
                                       b1, b1);
    for (const auto& poly : d)
      if (!im_partial_test(poly))
        return judge_bool("hamiltonian-map-diff", false, "identity-scale case failed");
  }
  auto d2 =
      hamiltonian_map_criterion({DiffPoly::var("u").scaled(Rational(2))}, {u}, {u}, b1, b1);
  bool nonzero = false;
  for (const auto& poly : d2)
    if (!im_partial_test(poly)) nonzero = true;
  if (!nonzero)
    return judge_bool("hamiltonian-map-diff", false, "non-map was not detected");
  // contraction image between the line operator and the canonical pair
  Sym x = diffsym("x"), p = diffsym("p");
  DiffOpMatrix symp(2, 2);
  symp.at(0, 1) = -DiffOp::identity();
  symp.at(1, 0) = DiffOp::identity();
  auto d3 = hamiltonian_map_criterion({DiffPoly::var("p") * DiffPoly::var("x", 1)}, {u},
                                      {x, p}, b1, symp);
  for (const auto& poly : d3)
    if (!im_partial_test(poly))
      return judge_bool("hamiltonian-map-diff", false, "contraction image failed");
  return pass("hamiltonian-map-diff", "criterion separates maps from non-maps");
}

std::vector<CheckInfo> build_catalog() {
  std::vector<CheckInfo> v;
  auto add = [&](std::string name, std::string summary, std::string formula,
                 std::vector<std::string> needs, std::vector<std::string> covers,
                 std::function<CheckResult(CheckContext&)> fn) {
    v.push_back(CheckInfo{std::move(name), std::move(summary), std::move(formula),
                          std::move(needs), std::move(covers), std::move(fn)});
  };

  add("artin", "braid relation for operators on V(x)V",
      "S23 S12 S23 = S12 S23 S12; holds for the permutation operator", {},
      {"check_artin", "embed_pair"}, check_artin_builtin);
  add("qybe", "triple tensor relation", "R12 R13 R23 = R23 R13 R12; holds for 1 and P", {},
      {"check_qybe"}, check_qybe_builtin);
  add("mirror-factorization", "mirror operator factors through adjacent swaps",
      "P23 P12 P23 = P12 P23 P12 = reversal of the three factors, dims 2-4", {},
      {"embed_pair", "tensor_product"}, check_mirror);
  add("embedding-identities", "slot-swap identities for pair embeddings",
      "A12 P23 = P23 A13, A13 P23 = P23 A12, A23 P12 = P12 A13, A13 P12 = P12 A23", {},
      {"embed_pair", "tensor_product", "commutator"}, check_embedding);
  add("quasiclassical-cybe", "order-two coefficient of the triple relation",
      "h^2 coefficient of R12 R13 R23 - R23 R13 R12 equals [r12,r13]+[r12,r23]+[r13,r23]",
      {}, {"quasiclassical_defect"}, check_quasiclassical);
  add("artin-quasiclassical", "order-two braid expansion",
      "rbar23 rbar12 P23 + rbar23 P12 rbar23 + P23 rbar12 rbar23 against the mirrored sum",
      {}, {"check_artin_quasiclassical"}, check_artin_quasi);
  add("unitarity-skewness", "unitarity forces skewness against the permutation",
      "S^2 = 1 through first order implies P r = -r P for r = P S1", {},
      {"unitarity_implies_skewness"}, check_unitarity);

  add("jacobi", "structure constants satisfy the triple identity",
      "sum over cyclic permutations of c_ij^s c_sk^t vanishes", {"lie_algebra"},
      {"jacobi_check"}, check_jacobi);
  add("coadjoint-rep", "coadjoint module matrices",
      "e_i . e^j = - sum_s c_is^j e^s; matrices are negative adjoint transposes",
      {"lie_algebra"}, {"coadjoint_rep"}, check_coadjoint);
  add("r-operator-roundtrip", "coefficient arrays versus dual maps",
      "<u, O(v)> = <u (x) v, r> in both directions", {"lie_algebra"},
      {"r_to_operator", "operator_to_r"}, check_roundtrip);
  add("cybe", "three-commutator tensor of a skew array",
      "c(r)^stw = sum r^ij r^kl (c_ik^s d_j^t d_l^w + d_i^s c_jk^t d_l^w + d_i^s d_k^t c_jl^w)",
      {"lie_algebra", "r_matrix"}, {"cybe_defect"}, check_cybe);
  add("o-operator", "defining equation of the operator",
      "O(O(u).v - O(v).u) = [O(u), O(v)] over module basis pairs",
      {"lie_algebra", "representation", "o_operator"}, {"o_equation_defect"},
      check_o_operator);
  add("induced-bracket", "bracket installed on the module",
      "[u,v] = O(u).v - O(v).u satisfies the triple identity",
      {"lie_algebra", "representation", "o_operator"}, {"induced_bracket"},
      check_induced_bracket);
  add("dual-cocycle", "pairing form closes on the induced dual bracket",
      "Omega(u,v) = <u, O(v)> has vanishing cyclic sum over induced brackets",
      {"lie_algebra", "r_matrix"}, {"induced_cocycle_check"}, check_dual_cocycle);
  add("drinfeld-equivalence", "inverse pairing form closes iff the commutator sum vanishes",
      "omega(x,y) = <O^inv x, y> closed on basis triples iff c(r) = 0; the two defects "
      "pair exactly",
      {"lie_algebra", "r_matrix"}, {"drinfeld_equivalence"}, check_drinfeld);
  add("push-forward", "transport along homomorphisms",
      "O_H = phi O_G phi^T satisfies the equation; phi^T intertwines the dual brackets",
      {}, {"push_forward"}, check_push_forward);

  add("linear-poisson", "linear coordinate bracket", "{u_i, u_j} = sum_k c_ij^k u_k",
      {"lie_algebra"}, {"linear_poisson"}, check_linear_poisson);
  add("quadratic-poisson", "quadratic coordinate bracket",
      "{u_i, u_j} = sum r^st c_is^a c_jt^b u_a u_b, cross-checked against "
      "<e_i.u, O(e_j.u)>",
      {"lie_algebra", "r_matrix"}, {"quadratic_poisson"}, check_quadratic_poisson);
  add("affine-poisson", "linear bracket shifted by a closed skew form",
      "{u_i, u_j} = sum_k c_ij^k u_k + b_ij with b([X,Y],Z) + cyclic = 0",
      {"lie_algebra"}, {"affine_poisson"}, check_affine_poisson);
  add("poisson-jacobi", "coordinate triple sums",
      "{{u_i,u_j},u_k} + cyclic vanishes for the constructed brackets", {"lie_algebra"},
      {"jacobi_defect"}, check_poisson_jacobi);
  add("poisson-compatibility", "mixed triple sums of bracket pairs",
      "{{.,.},.} mixed over two brackets vanishes on coordinates",
      {"lie_algebra", "r_matrix"}, {"compatibility_defect"}, check_compatibility);
  add("casimir", "functions annihilating a bracket", "{H, u_i} = 0 for all coordinates",
      {"lie_algebra"}, {"casimir_defect"}, check_casimir);
  add("infinitesimal-action", "criterion of infinitesimal Hamiltonian action",
      "X^({H,F}) - {X^H, F} - {H, X^F} = <[H~, F~], X> on coordinate Hamiltonians",
      {"lie_algebra"}, {"infinitesimal_action_defect"}, check_action);

  add("clebsch-map", "coordinates mapped to bilinear phase functions",
      "Phi(u_s) = sum chi_sa^b x^a p_b is Hamiltonian onto the canonical bracket",
      {"lie_algebra", "representation"}, {"clebsch_map"}, check_clebsch_map);
  add("symplectic-bracket", "canonical pairs", "{x^a, p_b} = delta, {x,x} = {p,p} = 0", {},
      {"symplectic_bracket"}, check_symplectic);
  add("quadratic-phase-bracket", "quadratic bracket on the phase space",
      "{x,x}, {p,x}, {p,p} built from r^st and the module action; satisfies the triple "
      "identity and pairs with the canonical bracket",
      {"lie_algebra", "representation", "r_matrix"}, {"quadratic_phase_bracket"},
      check_phase_bracket);
  add("hamiltonian-map", "the same map in both bracket regimes",
      "Phi({u_i,u_j}) = {Phi(u_i), Phi(u_j)} linear-to-canonical and quadratic-to-quadratic",
      {"lie_algebra", "representation", "r_matrix"}, {"hamiltonian_map_defect"},
      check_hamiltonian_map);
  add("dual-representation", "negative transpose module and the coordinate swap",
      "chi^d(X) = -chi(X)^T; swapping x with p and chi with chi^d preserves the family",
      {"lie_algebra", "representation"}, {"dual_representation"}, check_dual_rep);
  add("phase-action", "action criterion on the phase space",
      "the infinitesimal criterion with (Y^t x)~ = x nabla Y and (Y^t p)~ = -Y nabla p",
      {"lie_algebra", "representation", "r_matrix"}, {"phase_action_defect"},
      check_phase_action);

  add("crossed-bracket", "bracket mixing both coadjoint actions",
      "direct triple identity versus the paired quadrilinear criterion",
      {"lie_algebra"}, {"crossed_bracket"}, check_crossed);
  add("crossed-symplectic-cocycle", "difference form on the mixed bracket",
      "<u,Y> - <v,X> closes iff both halves are abelian", {"lie_algebra"},
      {"symplectic_cocycle_on_crossed"}, check_crossed_cocycle);
  add("semidirect-sum", "sum along a module on the dual",
      "[(X,u),(Y,v)] = ([X,Y], rho(X)v - rho(Y)u) is always Lie", {"lie_algebra"},
      {"semidirect_sum"}, check_semidirect);
  add("semidirect-cocycle-criterion", "closedness of the difference form on the sum",
      "closed iff rho^d(X)(Y) - rho^d(Y)(X) = [X,Y] with rho^d = -rho^T",
      {"lie_algebra"}, {"symplectic_cocycle_criterion"}, check_semidirect_criterion);
  add("quasiassociativity", "left-symmetric associator",
      "(xy)z - x(yz) = (yx)z - y(xz); the commutator is then Lie", {"product"},
      {"quasiassociative_check"}, check_quasiassoc);
  add("symplectic-double", "product on the sum with the dual",
      "(a,a*)(b,b*) = (ab, a b*); quasiassociative again, iterable", {"product"},
      {"symplectic_double"}, check_symplectic_double);
  add("o-from-symplectic", "block operator from the nondegenerate difference form",
      "O = [[0,1],[-1,0]] satisfies the equation and the induced dual bracket "
      "reproduces the sum",
      {"product"}, {"o_from_symplectic"}, check_o_from_symplectic);

  add("im-partial", "membership in the image of the total derivative",
      "all variational derivatives vanish and the constant term is zero", {},
      {"im_partial_test"}, check_im_partial);
  add("variational-calculus", "euler operator, adjoints and the second derivative",
      "delta/du = sum (-d)^n d/du^(n); (a d^n)^adj = (-d)^n a; D(delta H/delta u) "
      "self-adjoint",
      {}, {"variational_derivative", "frechet_derivative", "adjoint"}, check_variational);
  add("gmu-jacobi", "family bracket triple identity",
      "[(X,f),(Y,g)] = (XY'-X'Y, (Xg-Yf+mu(X'Y''-X''Y'))')", {"mu"}, {"gmu_bracket"},
      check_gmu_jacobi);
  add("gmu-cocycles", "the two closed forms on the family",
      "d^3(X)Y and Xg - Yf close up to total derivatives", {"mu"},
      {"gmu_cocycle_checks"}, check_gmu_cocycles);
  add("gmu-o-operator", "block operator of the combined form",
      "[[0,1],[-1,eps d^3]] is skew with inverse [[eps d^3,-1],[1,0]]", {"eps"},
      {"gmu_o_operator"}, check_gmu_o);
  add("gmu-dual-iso", "induced dual bracket rejoins the family",
      "[(u,p),(v,q)] = ((pv - qu + (eps-mu)(p'q''-p''q'))', pq'-p'q)", {"mu", "eps"},
      {"gmu_dual_bracket"}, check_gmu_dual);
  add("d1-linear", "line vector-field operator",
      "-(u d + d u) = -2 sqrt(u) d sqrt(u)", {}, {"d1_linear_matrix"}, check_d1_linear);
  add("d1-casimir", "kernel of the line operator",
      "B(delta H/delta u) = 0 exactly for H proportional to sqrt(u)", {},
      {"d1_casimir_check"}, check_d1_casimir);
  add("hamiltonian-triple", "constant, linear and quadratic operators of the family",
      "the quadratic operator from the coadjoint route matches its closed form; all "
      "pairs compatible",
      {"mu", "eps"}, {"gmu_hamiltonian_triple"}, check_triple);
  add("hamiltonian-map-diff", "operator-level map criterion",
      "Phi(B1) = D(Phi) B2 D(Phi)^adj paired against test elements", {},
      {"hamiltonian_map_criterion"}, check_map_diff);
  return v;
}

}  // namespace

bool CheckContext::r_verified() {
  if (!r_verified_) {
    if (!manifest.r_matrix || !manifest.lie_algebra) {
      r_verified_ = false;
    } else {
      OOperator o = r_to_operator(*manifest.lie_algebra, *manifest.r_matrix);
      r_verified_ = o.is_skew() && o_equation_defect(o).is_zero();
    }
  }
  return *r_verified_;
}

bool CheckContext::o_operator_verified() {
  if (!o_verified_) {
    if (!manifest.o_operator || !manifest.representation || !manifest.lie_algebra) {
      o_verified_ = false;
    } else {
      OOperator o{*manifest.representation, *manifest.lie_algebra, *manifest.o_operator};
      o_verified_ = o_equation_defect(o).is_zero();
    }
  }
  return *o_verified_;
}

const LieAlgebra& CheckContext::algebra() {
  if (!manifest.lie_algebra) throw InputError("check requires a lie_algebra section");
  return *manifest.lie_algebra;
}

const Representation& CheckContext::module() {
  if (!manifest.representation) throw InputError("check requires a representation section");
  return *manifest.representation;
}

const Tensor& CheckContext::r() {
  if (!manifest.r_matrix) throw InputError("check requires an r_matrix section");
  return *manifest.r_matrix;
}

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = build_catalog();
  return catalog;
}

const CheckInfo* find_check(const std::string& name) {
  for (const auto& info : check_catalog())
    if (info.name == name) return &info;
  return nullptr;
}

RunReport run_checks(const Manifest& m, const CheckOptions& opts) {
  // validate the request before running anything
  for (const auto& name : m.checks) {
    const CheckInfo* info = find_check(name);
    if (!info) throw InputError("unknown check '" + name + "'");
    for (const auto& need : info->needs) {
      bool present = (need == "lie_algebra" && m.lie_algebra.has_value()) ||
                     (need == "representation" && m.representation.has_value()) ||
                     (need == "r_matrix" && m.r_matrix.has_value()) ||
                     (need == "o_operator" && m.o_operator.has_value()) ||
                     (need == "product" && m.product.has_value()) ||
                     (need == "mu" && m.mu.has_value()) ||
                     (need == "eps" && m.eps.has_value());
      if (!present)
        throw InputError("check '" + name + "' requires manifest section '" + need + "'");
    }
  }
  RunReport report;
  report.seed = opts.seed;
  CheckContext ctx(m, opts);
  for (const auto& name : m.checks) {
    const CheckInfo* info = find_check(name);
    auto t0 = std::chrono::steady_clock::now();
    CheckResult result = info->run(ctx);
    auto t1 = std::chrono::steady_clock::now();
    result.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace omatrix
