#include <CLI11.hpp>

#include <iostream>

#include "summa/errors.hpp"
#include "summa/experiment.hpp"
#include "summa/sequence.hpp"

namespace {

constexpr int kExitConfig = 2;

int execute(summa::ExperimentConfig config, bool quiet) {
  const auto report = summa::run(config);
  summa::write_outputs(config, report);
  if (!quiet) {
    std::cout << report.summary;
    std::cout << "report: " << (std::filesystem::path(config.out_dir) / config.report_name).string() << '\n';
  }
  return report.exit_status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-scale laboratory for absolute Cesaro summability factors", "summa"};
  app.set_version_flag("--version", std::string(summa::kVersion));
  app.require_subcommand(1);

  std::string out_dir;
  double tolerance_slope = 0.0;
  bool quiet = false;
  app.add_option("--out", out_dir, "Output directory (overrides the config)");
  app.add_option("--tolerance-slope", tolerance_slope, "Slope tolerance of the growth diagnostic")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", quiet, "Suppress the standard-output summary");

  auto* run_cmd = app.add_subcommand("run", "Run an experiment configuration");
  run_cmd->fallthrough();
  std::string config_path;
  run_cmd->add_option("config", config_path, "Configuration JSON")->required();

  auto* family_cmd = app.add_subcommand("family", "Describe the built-in sequence families and bundles");
  family_cmd->fallthrough();
  bool list = false;
  family_cmd->add_flag("--list", list, "List every family");

  auto* oracle_cmd = app.add_subcommand("oracle", "Run the exact proof-oracle suites");
  oracle_cmd->fallthrough();
  std::uint64_t seed = 42;
  std::uint64_t trials = 0;
  oracle_cmd->add_option("--seed", seed, "Random seed");
  oracle_cmd->add_option("--trials", trials, "Trials per suite (default: the standard suite sizes)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*family_cmd) {
      std::cout << "sequence families:\n";
      for (const auto& f : summa::family_catalog()) {
        std::cout << "  " << f.name << "  " << f.formula;
        if (!f.params.empty()) std::cout << "  [" << f.params << "]";
        std::cout << '\n';
      }
      std::cout << "bundles:\n";
      for (const auto& b : summa::builtin_families()) std::cout << "  " << b.name << "  " << b.description << '\n';
      return 0;
    }

    summa::ExperimentConfig config;
    if (*run_cmd) {
      config = summa::load_config(config_path);
    } else {
      config.mode = summa::Mode::oracle;
      config.seed = seed;
      if (trials > 0) config.trials = {trials, trials, trials, trials};
    }
    if (!out_dir.empty()) config.out_dir = out_dir;
    if (tolerance_slope > 0.0) config.tolerances.slope = tolerance_slope;
    return execute(std::move(config), quiet);
  } catch (const summa::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const summa::InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}
