#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stratmhd/cli/config.hpp"
#include "stratmhd/diagnostics/diagnostics.hpp"

namespace stratmhd::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitHypothesis = 4,
};

struct RunResult {
  std::string run_dir;  // empty when no directory was created
  int exit_code = kExitOk;
  std::string message;
};

/// Loads the config, runs the experiment and writes energy.csv, decay.json,
/// optional snapshots and finally manifest.json (atomic rename).
RunResult run_experiment(const std::string& config_path, std::ostream& log);
RunResult run_experiment(const ExperimentConfig& cfg, const std::string& config_text,
                         std::ostream& log);

/// energy.csv header, in column order.
const std::vector<std::string>& energy_columns();

void write_energy_csv(const std::string& path,
                      const std::vector<diagnostics::EnergyReport>& rows);

}  // namespace stratmhd::cli
