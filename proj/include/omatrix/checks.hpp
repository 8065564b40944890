#ifndef OMATRIX_CHECKS_HPP
#define OMATRIX_CHECKS_HPP

#include <functional>

#include "omatrix/manifest.hpp"
#include "omatrix/report.hpp"

namespace omatrix {

struct CheckOptions {
  std::uint64_t seed = 0;
  int witness_limit = 10;
};

/// Shared state for one run: the manifest plus cached verdicts that act as
/// prerequisites (checks depending on a failed prerequisite are reported
/// skipped, never pass).
class CheckContext {
 public:
  CheckContext(const Manifest& m, const CheckOptions& opts) : manifest(m), options(opts) {}

  const Manifest& manifest;
  CheckOptions options;

  // True when the manifest r-matrix satisfies the operator equation over
  // the coadjoint module; cached across checks.
  bool r_verified();
  bool o_operator_verified();

  const LieAlgebra& algebra();  // throws InputError when absent
  const Representation& module();
  const Tensor& r();

 private:
  std::optional<bool> r_verified_;
  std::optional<bool> o_verified_;
};

struct CheckInfo {
  std::string name;
  std::string summary;                 // one line for the catalog
  std::string formula;                 // the defining identity, spelled out
  std::vector<std::string> needs;      // manifest sections required
  std::vector<std::string> covers;     // library operations exercised
  std::function<CheckResult(CheckContext&)> run;
};

const std::vector<CheckInfo>& check_catalog();
const CheckInfo* find_check(const std::string& name);

// Executes the manifest's requested checks in order.
RunReport run_checks(const Manifest& m, const CheckOptions& opts);

}  // namespace omatrix

#endif
