#ifndef OMATRIX_REPORT_HPP
#define OMATRIX_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "omatrix/tensor.hpp"

namespace omatrix {

enum class Verdict { pass, fail, skipped };

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::fail;
  std::string detail;
  // first nonzero defect entries, exact values rendered as p/q
  std::vector<std::pair<MultiIndex, std::string>> witness;
  double wall_ms = 0.0;
};

struct RunReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  int count(Verdict v) const {
    int n = 0;
    for (const auto& c : checks)
      if (c.verdict == v) ++n;
    return n;
  }
  bool all_passed() const { return count(Verdict::pass) == static_cast<int>(checks.size()); }
};

std::string verdict_name(Verdict v);

// Human-readable report, includes wall times.
std::string render_text(const RunReport& report);

// Machine report; omits wall times so that identical manifests produce
// byte-identical output.
std::string render_json(const RunReport& report);

void fill_witness(CheckResult& result, const Tensor& defect, std::size_t limit);

}  // namespace omatrix

#endif
