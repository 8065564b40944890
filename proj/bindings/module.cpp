#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "omatrix/checks.hpp"
#include "omatrix/clebsch.hpp"
#include "omatrix/gmu.hpp"
#include "omatrix/poisson.hpp"

namespace py = pybind11;
using namespace omatrix;

namespace {

using SparseEntries = std::vector<std::tuple<std::vector<int>, std::string>>;

Rank3 rank3_from_entries(int d0, int d1, int d2, const SparseEntries& entries,
                         const char* what) {
  Rank3 c(d0, d1, d2);
  for (const auto& [idx, val] : entries) {
    if (idx.size() != 3) throw InputError(std::string(what) + ": expected three indices");
    if (idx[0] < 0 || idx[0] >= d0 || idx[1] < 0 || idx[1] >= d1 || idx[2] < 0 ||
        idx[2] >= d2)
      throw InputError(std::string(what) + ": index out of bounds");
    c.at(idx[0], idx[1], idx[2]) = parse_rat(val);
  }
  return c;
}

Tensor tensor2_from_entries(int rows, int cols, const SparseEntries& entries,
                            const char* what) {
  Tensor t({rows, cols});
  for (const auto& [idx, val] : entries) {
    if (idx.size() != 2) throw InputError(std::string(what) + ": expected two indices");
    t.set({idx[0], idx[1]}, parse_rat(val));
  }
  return t;
}

SparseEntries tensor_to_entries(const Tensor& t) {
  SparseEntries out;
  for (const auto& [idx, val] : t.entries()) out.emplace_back(idx, rat_str(val));
  return out;
}

Matrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("matrix rows are ragged");
    for (int j = 0; j < c; ++j) m(i, j) = parse_rat(rows[i][j]);
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_omatrix, m) {
  m.doc() = "Exact verification of operator solutions of the classical Yang-Baxter "
            "equation and of the Poisson structures, phase-space models and doubles "
            "they induce.";

  py::register_exception<InputError>(m, "InputError");

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def_static("sl2", &LieAlgebra::sl2)
      .def_static("gl2", &LieAlgebra::gl2)
      .def_static("abelian", &LieAlgebra::abelian, py::arg("dim"))
      .def_static(
          "from_structure",
          [](int dim, const SparseEntries& entries, std::vector<std::string> names,
             bool defer_jacobi) {
            return LieAlgebra::from_structure(
                rank3_from_entries(dim, dim, dim, entries, "structure"), std::move(names),
                defer_jacobi);
          },
          py::arg("dim"), py::arg("structure"), py::arg("names") = std::vector<std::string>{},
          py::arg("defer_jacobi") = false)
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("basis_names",
                             [](const LieAlgebra& l) { return l.names(); })
      .def("jacobi_holds",
           [](const LieAlgebra& l) { return bracket_jacobi_defect(l.c()).is_zero(); })
      .def("jacobi_defect",
           [](const LieAlgebra& l) { return tensor_to_entries(bracket_jacobi_defect(l.c())); });

  py::class_<Representation>(m, "Representation")
      .def_static("coadjoint", &Representation::coadjoint)
      .def_static("sl2_fundamental", &Representation::sl2_fundamental)
      .def_static(
          "from_action",
          [](const LieAlgebra& l, int dim_v, const SparseEntries& entries) {
            return Representation(l, dim_v,
                                  rank3_from_entries(l.dim(), dim_v, dim_v, entries, "action"));
          },
          py::arg("algebra"), py::arg("dim_v"), py::arg("action"))
      .def_property_readonly("dim_v", &Representation::dim_v)
      .def("is_valid", &Representation::is_valid)
      .def("dual", &Representation::dual);

  m.def(
      "cybe_defect",
      [](const LieAlgebra& l, const SparseEntries& r) {
        return tensor_to_entries(
            cybe_defect(l, tensor2_from_entries(l.dim(), l.dim(), r, "r")));
      },
      py::arg("algebra"), py::arg("r"),
      "Three-commutator tensor of a skew coefficient array; empty means a solution.");

  m.def(
      "is_r_operator",
      [](const LieAlgebra& l, const SparseEntries& r) {
        OOperator o = r_to_operator(l, tensor2_from_entries(l.dim(), l.dim(), r, "r"));
        return o.is_skew() && o_equation_defect(o).is_zero();
      },
      py::arg("algebra"), py::arg("r"),
      "Whether the array is skew and satisfies the operator equation on the dual.");

  m.def(
      "is_o_operator",
      [](const LieAlgebra& l, const Representation& module,
         const std::vector<std::vector<std::string>>& matrix) {
        OOperator o{module, l, matrix_from_rows(matrix)};
        return o_equation_defect(o).is_zero();
      },
      py::arg("algebra"), py::arg("module"), py::arg("matrix"),
      "Whether the map from the module satisfies the operator equation.");

  m.def(
      "induced_bracket_entries",
      [](const LieAlgebra& l, const Representation& module,
         const std::vector<std::vector<std::string>>& matrix) {
        AlgebraOnModule a = induced_bracket(OOperator{module, l, matrix_from_rows(matrix)});
        return tensor_to_entries(a.bracket.to_tensor());
      },
      py::arg("algebra"), py::arg("module"), py::arg("matrix"));

  m.def(
      "check_artin",
      [](const std::vector<std::vector<std::string>>& s) {
        return check_artin(matrix_from_rows(s)).holds;
      },
      py::arg("operator"), "Braid relation for an operator on the tensor square.");
  m.def(
      "check_qybe",
      [](const std::vector<std::vector<std::string>>& r) {
        return check_qybe(matrix_from_rows(r)).holds;
      },
      py::arg("operator"));

  m.def(
      "linear_poisson_entry",
      [](const LieAlgebra& l, int i, int j) {
        PoissonStructure p = linear_poisson(l);
        return p.pi(i, j).to_string(p.var_names());
      },
      py::arg("algebra"), py::arg("i"), py::arg("j"));
  m.def(
      "quadratic_poisson_entry",
      [](const LieAlgebra& l, const SparseEntries& r, int i, int j) {
        PoissonStructure p =
            quadratic_poisson(l, tensor2_from_entries(l.dim(), l.dim(), r, "r"));
        return p.pi(i, j).to_string(p.var_names());
      },
      py::arg("algebra"), py::arg("r"), py::arg("i"), py::arg("j"));

  m.def(
      "clebsch_images",
      [](const Representation& chi) {
        ClebschMap phi = clebsch_map(chi);
        std::vector<std::string> out;
        for (const auto& im : phi.images) out.push_back(im.to_string(phase_var_names(phi.dim_v)));
        return out;
      },
      py::arg("module"));

  m.def(
      "gmu_dual_parameter",
      [](const std::string& mu, const std::string& eps) {
        GmuDualIsoReport rep = gmu_dual_iso(parse_rat(mu), parse_rat(eps));
        if (!rep.matches_relabeled_family || !rep.third_order_coefficient_exact)
          throw std::logic_error("dual bracket left the family");
        return rat_str(parse_rat(eps) - parse_rat(mu));
      },
      py::arg("mu"), py::arg("eps"),
      "Parameter of the family member isomorphic to the dual bracket.");

  m.def("list_checks", []() {
    std::vector<std::string> names;
    for (const auto& info : check_catalog()) names.push_back(info.name);
    return names;
  });
  m.def(
      "explain",
      [](const std::string& name) {
        const CheckInfo* info = find_check(name);
        if (!info) throw InputError("unknown check '" + name + "'");
        return info->summary + "; identity: " + info->formula;
      },
      py::arg("name"));

  m.def(
      "run_manifest",
      [](const std::string& json_text, std::uint64_t seed) {
        Manifest manifest = parse_manifest(json_text);
        CheckOptions opts;
        opts.seed = seed;
        RunReport report = run_checks(manifest, opts);
        return py::make_tuple(report.all_passed() ? 0 : 1, render_json(report));
      },
      py::arg("json_text"), py::arg("seed") = 0,
      "Parse a manifest and run its checks; returns (exit_code, report_json).");

  m.attr("__version__") = "1.0.0";
}
