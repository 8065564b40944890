#include "omatrix/report.hpp"

#include <json.hpp>
#include <sstream>

namespace omatrix {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "unknown";
}

std::string render_text(const RunReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    std::string tag = verdict_name(c.verdict);
    for (auto& ch : tag) ch = static_cast<char>(::toupper(static_cast<unsigned char>(ch)));
    os << "[" << tag << "] " << c.name;
    os << " (" << c.wall_ms << " ms)";
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
    for (const auto& [idx, val] : c.witness) {
      os << "    witness [";
      for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
      os << "] = " << val << "\n";
    }
  }
  os << report.count(Verdict::pass) << " passed, " << report.count(Verdict::fail)
     << " failed, " << report.count(Verdict::skipped) << " skipped\n";
  return os.str();
}

std::string render_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = "omatrix/1";
  j["seed"] = report.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["verdict"] = verdict_name(c.verdict);
    if (!c.detail.empty()) jc["detail"] = c.detail;
    jc["witness"] = nlohmann::ordered_json::array();
    for (const auto& [idx, val] : c.witness) {
      nlohmann::ordered_json w;
      w["indices"] = idx;
      w["value"] = val;
      jc["witness"].push_back(w);
    }
    j["checks"].push_back(jc);
  }
  j["summary"] = {{"pass", report.count(Verdict::pass)},
                  {"fail", report.count(Verdict::fail)},
                  {"skipped", report.count(Verdict::skipped)}};
  return j.dump(2) + "\n";
}

void fill_witness(CheckResult& result, const Tensor& defect, std::size_t limit) {
  for (const auto& [idx, val] : defect.witnesses(limit))
    result.witness.emplace_back(idx, rat_str(val));
}

}  // namespace omatrix
