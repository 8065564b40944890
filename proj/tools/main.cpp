#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "omatrix/checks.hpp"
#include "omatrix/diff_poly.hpp"

using namespace omatrix;

namespace {

int cmd_run(const std::string& path, const std::string& json_path, std::uint64_t seed,
            int max_jet, int witness_limit) {
  Manifest m = load_manifest(path);
  set_max_jet_order(max_jet);
  CheckOptions opts;
  opts.seed = seed;
  opts.witness_limit = witness_limit;
  RunReport report = run_checks(m, opts);
  std::cout << render_text(report);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw InputError("cannot write report to '" + json_path + "'");
    out << render_json(report);
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_list() {
  for (const auto& info : check_catalog())
    std::cout << info.name << "  --  " << info.summary << "\n";
  std::cout << check_catalog().size() << " checks\n";
  return 0;
}

int cmd_explain(const std::string& name) {
  const CheckInfo* info = find_check(name);
  if (!info) throw InputError("unknown check '" + name + "'");
  std::cout << info->name << "\n  " << info->summary << "\n  identity: " << info->formula
            << "\n";
  if (!info->needs.empty()) {
    std::cout << "  needs:";
    for (const auto& n : info->needs) std::cout << " " << n;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for operator solutions of the classical Yang-Baxter "
               "equation and the structures they induce"};
  app.require_subcommand(1);

  std::string manifest_path, json_path, check_name;
  std::uint64_t seed = 0;
  int max_jet = 12, witness_limit = 10;

  CLI::App* run = app.add_subcommand("run", "run the checks requested by a manifest");
  run->add_option("manifest", manifest_path, "path to a JSON manifest")->required();
  run->add_option("--json", json_path, "write the machine-readable report here");
  run->add_option("--seed", seed, "seed for randomized property checks");
  run->add_option("--max-jet-order", max_jet, "ceiling for jet orders");
  run->add_option("--witness-limit", witness_limit, "max defect entries per check");

  CLI::App* list = app.add_subcommand("list-checks", "print the check catalog");
  CLI::App* explain = app.add_subcommand("explain", "describe one check");
  explain->add_option("check", check_name, "check name")->required();

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(manifest_path, json_path, seed, max_jet, witness_limit);
    if (list->parsed()) return cmd_list();
    if (explain->parsed()) return cmd_explain(check_name);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
