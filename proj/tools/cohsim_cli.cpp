// cohsim: scenario runner for the coherence-migration simulations.
//
// Exit codes: 0 success, 2 config error, 3 runtime/convergence error.
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cohsim/config.hpp"
#include "cohsim/runner.hpp"

namespace {

void print_diagnostics(const std::vector<cohsim::Diagnostic>& diags) {
  for (const auto& d : diags) {
    std::cerr << "config";
    if (d.line > 0) std::cerr << ":" << d.line;
    if (!d.field.empty()) std::cerr << " [" << d.field << "]";
    std::cerr << ": " << d.message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence migration simulator: c-phase and SPDC experiments, "
               "conservation sweeps and tomography round-trips"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_override;
  std::int64_t seed_override = -1;

  CLI::App* run = app.add_subcommand("run", "run a scenario from a config file");
  run->add_option("config", config_path, "config file")->required();
  run->add_option("--seed", seed_override, "override the root seed");
  run->add_option("--out", out_override, "override the output directory");

  CLI::App* validate =
      app.add_subcommand("validate", "check a config file without running");
  validate->add_option("config", config_path, "config file")->required();

  CLI11_PARSE(app, argc, argv);

  cohsim::ParseResult parsed = cohsim::parse_config_file(config_path);
  if (validate->parsed()) {
    if (!parsed.ok()) {
      print_diagnostics(parsed.diagnostics);
      return 2;
    }
    std::cout << "ok\n";
    return 0;
  }

  if (!parsed.ok()) {
    print_diagnostics(parsed.diagnostics);
    return 2;
  }
  if (seed_override >= 0)
    parsed.config.seed = static_cast<std::uint64_t>(seed_override);
  if (!out_override.empty()) parsed.config.out_dir = out_override;

  try {
    return cohsim::run_scenario(parsed.config, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
