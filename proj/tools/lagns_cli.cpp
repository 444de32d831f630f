#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lagns/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"1-D viscous heat-conducting gas in Lagrangian mass coordinates"};
  app.require_subcommand(1);

  std::string config;
  std::string out_dir;
  int levels = 3;
  std::vector<double> alphas, betas;

  auto* run = app.add_subcommand("run", "integrate a scenario, write timeseries and final snapshot");
  run->add_option("--config", config, "scenario JSON")->required();
  run->add_option("--out", out_dir, "output directory")->required();

  auto* verify = app.add_subcommand("verify", "run a scenario and print the PASS/FAIL invariant table");
  verify->add_option("--config", config, "scenario JSON")->required();

  auto* conv = app.add_subcommand("convergence", "manufactured-solution refinement study");
  conv->add_option("--config", config, "scenario JSON with an mms case")->required();
  conv->add_option("--levels", levels, "number of nested grids (>= 3)");

  auto* sweep = app.add_subcommand("sweep", "run the alpha x beta product concurrently");
  sweep->add_option("--config", config, "base scenario JSON")->required();
  sweep->add_option("--alpha", alphas, "comma-separated alpha values")->required()->delimiter(',');
  sweep->add_option("--beta", betas, "comma-separated beta values")->required()->delimiter(',');
  sweep->add_option("--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lagns::exit_code::kUsage;
  }

  if (*run) return lagns::cmd_run(config, out_dir, std::cout, std::cerr);
  if (*verify) return lagns::cmd_verify(config, std::cout, std::cerr);
  if (*conv) return lagns::cmd_convergence(config, levels, std::cout, std::cerr);
  return lagns::cmd_sweep(config, alphas, betas, out_dir, std::cout, std::cerr);
}
