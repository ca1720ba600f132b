#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "stratmhd/background/background.hpp"
#include "stratmhd/cli/experiment.hpp"
#include "stratmhd/cli/report.hpp"
#include "stratmhd/cli/selftest.hpp"
#include "stratmhd/error.hpp"
#include "stratmhd/linear/linear.hpp"

namespace cli = stratmhd::cli;

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("THREADS")) {
    const int n = std::atoi(threads);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"Pseudo-spectral stratified MHD simulator and verification toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run an experiment from a config file");
  run->add_option("config", config_path, "INI config file")->required();

  std::string run_dir;
  auto* report = app.add_subcommand("report", "Recompute fits and verdicts from a run directory");
  report->add_option("run_dir", run_dir, "Run directory")->required();

  auto* selftest = app.add_subcommand("selftest", "Cross-check against reference oracles");

  double kappa = 2.0, c0 = 0.5 / 3.14159265358979323846;
  auto* rates = app.add_subcommand("rates", "Print alpha, c_kappa and beta");
  rates->add_option("--kappa", kappa, "Velocity damping")->required();
  rates->add_option("--c0", c0, "Background field strength")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitConfig;
  }

  try {
    if (*run) {
      const auto r = cli::run_experiment(config_path, std::cerr);
      if (!r.run_dir.empty()) std::cout << r.run_dir << '\n';
      return r.exit_code;
    }
    if (*report) {
      cli::emit_report(run_dir, std::cout);
      return 0;
    }
    if (*selftest) return cli::selftest(std::cout) == 0 ? 0 : 1;
    if (*rates) {
      if (!(kappa > 0.0) || c0 == 0.0) {
        std::cerr << "error: need kappa > 0 and c0 != 0\n";
        return cli::kExitConfig;
      }
      const double alpha = stratmhd::background::background_decay_rate(kappa, c0);
      const double ck = stratmhd::linear::spectral_abscissa(kappa, c0);
      const double beta = stratmhd::linear::bootstrap_rate(kappa, c0);
      std::cout.precision(17);
      std::cout << nlohmann::ordered_json{{"kappa", kappa}, {"c0", c0}, {"alpha", alpha},
                                          {"c_kappa", ck}, {"beta", beta}}
                       .dump(2)
                << '\n';
      return 0;
    }
  } catch (const stratmhd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return cli::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
