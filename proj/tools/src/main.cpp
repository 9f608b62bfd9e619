#include <iostream>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "paretotrace/app.hpp"

namespace cli = pareto::cli;

int main(int argc, char** argv) {
  CLI::App app{"Pareto front tracing by numerical integration of the optimality ODE"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  std::string steps;
  bool verbose = false;

  auto* trace = app.add_subcommand("trace", "trace the front described by a run configuration");
  trace->add_option("--config", config_path, "run configuration (JSON)")->required();
  trace->add_option("--output-dir", output_dir, "overrides output_dir of the configuration");
  trace->add_flag("--verbose", verbose, "progress messages on stderr");

  auto* order = app.add_subcommand("order-study", "empirical convergence order of the integrator");
  order->add_option("--config", config_path, "run configuration (JSON)")->required();
  order->add_option("--steps", steps, "comma separated step sizes")->required();
  order->add_option("--output-dir", output_dir, "overrides output_dir of the configuration");
  order->add_flag("--verbose", verbose, "progress messages on stderr");

  auto* validate = app.add_subcommand("validate", "check a run configuration without running it");
  validate->add_option("--config", config_path, "run configuration (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitConfigError;
  }

  cli::RunOptions options;
  if (!output_dir.empty()) options.output_dir = output_dir;
  options.verbose = verbose;
  options.log = &std::cerr;

  return cli::guarded(
      [&] {
        const cli::RunConfig config = cli::load_run_config(config_path);
        if (*validate) {
          std::cout << cli::validate_config(config).dump() << '\n';
          return 0;
        }
        if (*order) {
          const auto result = cli::run_order_study(config, cli::parse_steps(steps), options);
          const auto& slope = result.manifest.at("slope");
          if (slope.is_null()) {
            std::cout << "slope: none, every error is at round-off (method exact on this field)\n";
          } else {
            std::cout << "slope: " << slope.get<double>() << '\n';
          }
          return result.exit_code;
        }
        const auto result = cli::run_trace(config, options);
        for (const auto& t : result.manifest.at("traces")) {
          std::cout << t.at("name").get<std::string>() << ": " << t.at("points") << " points, forward "
                    << t.at("forward").at("termination").get<std::string>() << ", backward "
                    << t.at("backward").at("termination").get<std::string>() << '\n';
        }
        return result.exit_code;
      },
      std::cerr);
}
