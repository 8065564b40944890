#include "omatrix/manifest.hpp"

#include <fstream>
#include <json.hpp>

namespace omatrix {

namespace {

using nlohmann::json;

Rational field_rat(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError(path + ": expected a rational as \"p/q\"");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

int field_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path + ": expected an integer");
  return j.get<int>();
}

// Reads an array of {indices: [...], value: "p/q"} into a dense rank-3 block.
void read_sparse3(const json& j, const std::string& path, Rank3& out) {
  if (!j.is_array()) throw InputError(path + ": expected an array of entries");
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& e = j[k];
    std::string epath = path + "[" + std::to_string(k) + "]";
    if (!e.is_object() || !e.contains("indices") || !e.contains("value"))
      throw InputError(epath + ": expected {indices, value}");
    const json& idx = e["indices"];
    if (!idx.is_array() || idx.size() != 3)
      throw InputError(epath + ".indices: expected three indices");
    int a = field_int(idx[0], epath + ".indices[0]");
    int b = field_int(idx[1], epath + ".indices[1]");
    int c = field_int(idx[2], epath + ".indices[2]");
    if (a < 0 || a >= out.d0 || b < 0 || b >= out.d1 || c < 0 || c >= out.d2)
      throw InputError(epath + ".indices: out of bounds");
    out.at(a, b, c) = field_rat(e["value"], epath + ".value");
  }
}

Tensor read_sparse2(const json& j, const std::string& path, int rows, int cols) {
  if (!j.is_array()) throw InputError(path + ": expected an array of entries");
  Tensor t({rows, cols});
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& e = j[k];
    std::string epath = path + "[" + std::to_string(k) + "]";
    if (!e.is_object() || !e.contains("indices") || !e.contains("value"))
      throw InputError(epath + ": expected {indices, value}");
    const json& idx = e["indices"];
    if (!idx.is_array() || idx.size() != 2)
      throw InputError(epath + ".indices: expected two indices");
    int a = field_int(idx[0], epath + ".indices[0]");
    int b = field_int(idx[1], epath + ".indices[1]");
    if (a < 0 || a >= rows || b < 0 || b >= cols)
      throw InputError(epath + ".indices: out of bounds");
    t.set({a, b}, field_rat(e["value"], epath + ".value"));
  }
  return t;
}

}  // namespace

Manifest parse_manifest(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("manifest: expected a JSON object");
  if (!j.contains("schema") || j["schema"] != "omatrix/1")
    throw InputError("schema: expected \"omatrix/1\"");
  if (!j.contains("scalar") || j["scalar"] != "rational")
    throw InputError("scalar: expected \"rational\"");

  Manifest m;

  if (j.contains("lie_algebra")) {
    const json& la = j["lie_algebra"];
    if (!la.is_object() || !la.contains("dim"))
      throw InputError("lie_algebra: expected {dim, structure}");
    int n = field_int(la["dim"], "lie_algebra.dim");
    if (n < 1) throw InputError("lie_algebra.dim: must be positive");
    Rank3 c(n, n, n);
    if (la.contains("structure")) read_sparse3(la["structure"], "lie_algebra.structure", c);
    std::vector<std::string> names;
    if (la.contains("basis")) {
      for (const auto& b : la["basis"]) {
        if (!b.is_string()) throw InputError("lie_algebra.basis: expected strings");
        names.push_back(b.get<std::string>());
      }
      if (static_cast<int>(names.size()) != n)
        throw InputError("lie_algebra.basis: expected one name per basis element");
    }
    try {
      m.lie_algebra = LieAlgebra::from_structure(std::move(c), std::move(names), true);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("lie_algebra.structure: ") + e.what());
    }
  }

  if (j.contains("representation")) {
    if (!m.lie_algebra) throw InputError("representation: requires lie_algebra");
    const json& rep = j["representation"];
    if (!rep.is_object() || !rep.contains("dim"))
      throw InputError("representation: expected {dim, action}");
    int dv = field_int(rep["dim"], "representation.dim");
    if (dv < 1) throw InputError("representation.dim: must be positive");
    Rank3 chi(m.lie_algebra->dim(), dv, dv);
    if (rep.contains("action")) read_sparse3(rep["action"], "representation.action", chi);
    m.representation = Representation(*m.lie_algebra, dv, std::move(chi));
    if (!m.representation->is_valid())
      throw InputError("representation.action: not a representation of the algebra");
  }

  if (j.contains("r_matrix")) {
    if (!m.lie_algebra) throw InputError("r_matrix: requires lie_algebra");
    const json& rm = j["r_matrix"];
    if (!rm.is_object() || !rm.contains("entries"))
      throw InputError("r_matrix: expected {entries}");
    int n = m.lie_algebra->dim();
    m.r_matrix = read_sparse2(rm["entries"], "r_matrix.entries", n, n);
    if (!Matrix::from_tensor(*m.r_matrix).is_skew())
      throw InputError("r_matrix.entries: matrix must be skew");
  }

  if (j.contains("o_operator")) {
    if (!m.representation) throw InputError("o_operator: requires representation");
    const json& oo = j["o_operator"];
    if (!oo.is_object() || !oo.contains("entries"))
      throw InputError("o_operator: expected {entries}");
    Tensor t = read_sparse2(oo["entries"], "o_operator.entries", m.lie_algebra->dim(),
                            m.representation->dim_v());
    m.o_operator = Matrix::from_tensor(t);
  }

  if (j.contains("rho")) {
    if (!m.lie_algebra) throw InputError("rho: requires lie_algebra");
    const json& rj = j["rho"];
    if (!rj.is_object()) throw InputError("rho: expected {action} or {coadjoint}");
    if (rj.contains("coadjoint") && rj["coadjoint"].is_boolean() &&
        rj["coadjoint"].get<bool>()) {
      m.rho = Representation::coadjoint(*m.lie_algebra);
    } else {
      int n = m.lie_algebra->dim();
      Rank3 chi(n, n, n);
      if (rj.contains("action")) read_sparse3(rj["action"], "rho.action", chi);
      m.rho = Representation(*m.lie_algebra, n, std::move(chi));
      if (!m.rho->is_valid())
        throw InputError("rho.action: not a representation of the algebra");
    }
  }

  if (j.contains("product")) {
    const json& pj = j["product"];
    if (!pj.is_object() || !pj.contains("dim"))
      throw InputError("product: expected {dim, entries}");
    int n = field_int(pj["dim"], "product.dim");
    if (n < 1) throw InputError("product.dim: must be positive");
    Rank3 mm(n, n, n);
    if (pj.contains("entries")) read_sparse3(pj["entries"], "product.entries", mm);
    m.product = BilinearProduct{n, std::move(mm)};
  }

  if (j.contains("diff_params")) {
    const json& dp = j["diff_params"];
    if (!dp.is_object()) throw InputError("diff_params: expected an object");
    if (dp.contains("mu")) m.mu = field_rat(dp["mu"], "diff_params.mu");
    if (dp.contains("eps")) m.eps = field_rat(dp["eps"], "diff_params.eps");
  }

  if (!j.contains("checks") || !j["checks"].is_array())
    throw InputError("checks: expected an array of check names");
  for (const auto& c : j["checks"]) {
    if (!c.is_string()) throw InputError("checks: expected strings");
    m.checks.push_back(c.get<std::string>());
  }
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read manifest '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_manifest(text);
}

}  // namespace omatrix
