#include "doctest.h"
#include "omatrix/checks.hpp"

using namespace omatrix;

namespace {

const char* kMiniManifest = R"({
  "schema": "omatrix/1",
  "scalar": "rational",
  "lie_algebra": {
    "dim": 3,
    "basis": ["h", "e", "f"],
    "structure": [
      {"indices": [0, 1, 1], "value": "2"},
      {"indices": [1, 0, 1], "value": "-2"},
      {"indices": [0, 2, 2], "value": "-2"},
      {"indices": [2, 0, 2], "value": "2"},
      {"indices": [1, 2, 0], "value": "1"},
      {"indices": [2, 1, 0], "value": "-1"}
    ]
  },
  "r_matrix": {
    "entries": [
      {"indices": [0, 1], "value": "1"},
      {"indices": [1, 0], "value": "-1"}
    ]
  },
  "checks": ["jacobi", "cybe", "dual-cocycle"]
})";

}  // namespace

TEST_CASE("catalog has enough entries and unique names") {
  const auto& catalog = check_catalog();
  CHECK(catalog.size() >= 25);
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i + 1; j < catalog.size(); ++j)
      CHECK(catalog[i].name != catalog[j].name);
  CHECK(find_check("quadratic-poisson") != nullptr);
  CHECK(find_check("nosuch") == nullptr);
}

TEST_CASE("every library operation is reachable from the catalog") {
  const char* ops[] = {
      "tensor_product",       "embed_pair",         "commutator",
      "check_artin",          "check_qybe",         "quasiclassical_defect",
      "check_artin_quasiclassical", "unitarity_implies_skewness",
      "jacobi_check",         "coadjoint_rep",      "r_to_operator",
      "operator_to_r",        "cybe_defect",        "o_equation_defect",
      "induced_bracket",      "induced_cocycle_check", "drinfeld_equivalence",
      "push_forward",         "linear_poisson",     "quadratic_poisson",
      "affine_poisson",       "jacobi_defect",      "compatibility_defect",
      "casimir_defect",       "infinitesimal_action_defect", "clebsch_map",
      "symplectic_bracket",   "quadratic_phase_bracket", "hamiltonian_map_defect",
      "dual_representation",  "phase_action_defect", "crossed_bracket",
      "symplectic_cocycle_on_crossed", "semidirect_sum", "symplectic_cocycle_criterion",
      "quasiassociative_check", "symplectic_double", "o_from_symplectic",
      "im_partial_test",      "variational_derivative", "frechet_derivative",
      "adjoint",              "gmu_bracket",        "gmu_cocycle_checks",
      "gmu_o_operator",       "gmu_dual_bracket",   "d1_linear_matrix",
      "d1_casimir_check",     "gmu_hamiltonian_triple", "hamiltonian_map_criterion"};
  for (const char* op : ops) {
    bool covered = false;
    for (const auto& info : check_catalog())
      for (const auto& c : info.covers)
        if (c == op) covered = true;
    INFO("operation ", op);
    CHECK(covered);
  }
}

TEST_CASE("manifest parsing and validation errors carry field paths") {
  CHECK_THROWS_AS(parse_manifest("{not json"), InputError);
  CHECK_THROWS_AS(parse_manifest("{}"), InputError);
  CHECK_THROWS_AS(parse_manifest(R"({"schema": "other/1", "checks": []})"), InputError);

  // non-skew r is refused at load
  try {
    parse_manifest(R"({
      "schema": "omatrix/1",
      "scalar": "rational",
      "lie_algebra": {"dim": 2},
      "r_matrix": {"entries": [{"indices": [0, 1], "value": "1"}]},
      "checks": ["cybe"]
    })");
    CHECK(false);
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("r_matrix") != std::string::npos);
  }

  // out-of-bounds indices name the entry
  try {
    parse_manifest(R"({
      "schema": "omatrix/1",
      "scalar": "rational",
      "lie_algebra": {"dim": 2, "structure": [{"indices": [0, 1, 5], "value": "1"}]},
      "checks": []
    })");
    CHECK(false);
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("lie_algebra.structure[0]") != std::string::npos);
  }

  // structure constants must be skew
  CHECK_THROWS_AS(parse_manifest(R"({
    "schema": "omatrix/1",
    "scalar": "rational",
    "lie_algebra": {"dim": 2, "structure": [{"indices": [0, 1, 0], "value": "1"}]},
    "checks": []
  })"),
                  InputError);
}

TEST_CASE("unknown checks and missing sections are input errors") {
  Manifest m = parse_manifest(kMiniManifest);
  m.checks = {"nosuch"};
  CHECK_THROWS_AS(run_checks(m, CheckOptions{}), InputError);
  m.checks = {"o-operator"};  // needs representation + o_operator
  CHECK_THROWS_AS(run_checks(m, CheckOptions{}), InputError);
}

TEST_CASE("explicit module sections on the dual") {
  std::string text = R"({
    "schema": "omatrix/1",
    "scalar": "rational",
    "lie_algebra": {
      "dim": 2,
      "structure": [
        {"indices": [0, 1, 1], "value": "2"},
        {"indices": [1, 0, 1], "value": "-2"}
      ]
    },
    "rho": {"coadjoint": true},
    "checks": ["semidirect-sum", "semidirect-cocycle-criterion"]
  })";
  Manifest m = parse_manifest(text);
  REQUIRE(m.rho.has_value());
  RunReport rep = run_checks(m, CheckOptions{});
  CHECK(rep.checks[0].verdict == Verdict::pass);
  CHECK(rep.checks[1].verdict == Verdict::pass);

  // an explicit action that is not a module is refused at load
  std::string bad = R"({
    "schema": "omatrix/1",
    "scalar": "rational",
    "lie_algebra": {
      "dim": 2,
      "structure": [
        {"indices": [0, 1, 1], "value": "2"},
        {"indices": [1, 0, 1], "value": "-2"}
      ]
    },
    "rho": {"action": [
      {"indices": [0, 0, 1], "value": "1"},
      {"indices": [1, 0, 0], "value": "1"}
    ]},
    "checks": ["semidirect-sum"]
  })";
  CHECK_THROWS_AS(parse_manifest(bad), InputError);
}

TEST_CASE("reports are deterministic for identical manifests") {
  Manifest m1 = parse_manifest(kMiniManifest);
  Manifest m2 = parse_manifest(kMiniManifest);
  CheckOptions opts;
  opts.seed = 7;
  RunReport r1 = run_checks(m1, opts);
  RunReport r2 = run_checks(m2, opts);
  CHECK(render_json(r1) == render_json(r2));
  CHECK(r1.all_passed());
}

TEST_CASE("failing checks produce witnesses and nonzero summaries") {
  // a valid two-dimensional structure that is skew but whose requested
  // array fails the operator equation: e wedge f on the rank-one fixture
  std::string text = R"({
    "schema": "omatrix/1",
    "scalar": "rational",
    "lie_algebra": {
      "dim": 3,
      "structure": [
        {"indices": [0, 1, 1], "value": "2"},
        {"indices": [1, 0, 1], "value": "-2"},
        {"indices": [0, 2, 2], "value": "-2"},
        {"indices": [2, 0, 2], "value": "2"},
        {"indices": [1, 2, 0], "value": "1"},
        {"indices": [2, 1, 0], "value": "-1"}
      ]
    },
    "r_matrix": {"entries": [
      {"indices": [1, 2], "value": "1"},
      {"indices": [2, 1], "value": "-1"}
    ]},
    "checks": ["jacobi", "cybe", "quadratic-poisson"]
  })";
  Manifest m = parse_manifest(text);
  RunReport rep = run_checks(m, CheckOptions{});
  CHECK(rep.checks[0].verdict == Verdict::pass);
  CHECK(rep.checks[1].verdict == Verdict::fail);  // c(r) nonzero
  CHECK(!rep.checks[1].witness.empty());
  CHECK(rep.checks[2].verdict == Verdict::skipped);  // prerequisite failed
  CHECK(!rep.all_passed());
}
