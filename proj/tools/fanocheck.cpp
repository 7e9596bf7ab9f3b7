#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "fano/report.hpp"
#include "fano/scen216.hpp"
#include "fano/scen317.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

std::vector<fano::CheckSpec> checks_for(const std::string& scenario, const fano::RunOptions& opt) {
  if (scenario == "3-17") return fano::scenario317_checks(fano::Scenario317::load(), opt);
  return fano::scenario216_checks(fano::Scenario216::load(), opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact re-derivation of the numeric claims for Fano families 2.16 and 3.17"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "run the checks of one scenario");

  std::string scenario, pattern = "*", format = "text";
  fano::RunOptions opt;
  bool list = false;
  verify->add_option("scenario", scenario, "scenario id (3-17 or 2-16)")->required();
  verify->add_option("--check", pattern, "glob over check ids");
  verify->add_option("--report", format, "report format")->check(CLI::IsMember({"text", "json", "md"}));
  verify->add_option("--depth", opt.depth, "chain exploration depth")->check(CLI::Range(1, 20));
  verify->add_option("--grid", opt.grid, "integer grid bound for the parametric families")->check(CLI::Range(1, 200));
  verify->add_flag("--list", list, "list check ids with descriptions and anchors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  if (scenario != "3-17" && scenario != "2-16") {
    std::cerr << "unknown scenario '" << scenario << "' (expected 3-17 or 2-16)\n";
    return kUsage;
  }

  try {
    const auto all = checks_for(scenario, opt);
    const auto selected = fano::select_checks(all, pattern);
    if (list) {
      for (const auto* c : selected) std::cout << c->id << "\t" << c->description << "\t" << c->anchor << "\n";
      return selected.empty() ? kUsage : kPass;
    }
    if (selected.empty()) {
      std::cerr << "no check of scenario " << scenario << " matches '" << pattern << "'\n";
      return kUsage;
    }
    std::vector<fano::CheckReport> reports;
    for (const auto* c : selected) reports.push_back(fano::run_check(scenario, *c));
    if (format == "json")
      std::cout << fano::render_json(reports);
    else if (format == "md")
      std::cout << fano::render_markdown(scenario, reports);
    else
      std::cout << fano::render_text(reports);
    return fano::all_succeeded(reports) ? kPass : kFail;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
