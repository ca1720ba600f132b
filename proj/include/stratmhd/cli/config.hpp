#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "stratmhd/sim/state.hpp"

namespace stratmhd::cli {

enum class Mode { Nonlinear, Linear, Background };

const char* to_string(Mode m);

struct ExperimentConfig {
  sim::SimConfig sim;
  Mode mode = Mode::Nonlinear;
  std::uint64_t seed = 1;
  double bg_amplitude = 0.05;
  std::vector<double> phi0, psi0;  // explicit cosine coefficients, if given
  std::string phi0_csv, psi0_csv;  // two-column (y, value) files, if given
  std::string out_dir = "runs";
  bool snapshots = false;
  int snapshot_stride = 1;  // in output steps
};

/// INI-style text with sections [physics], [grid], [time], [init], [output].
/// Unknown sections or keys, unparsable values and out-of-range parameters
/// raise ConfigError. Relative CSV paths resolve against base_dir.
ExperimentConfig parse_config(std::istream& in, const std::string& base_dir = ".");
ExperimentConfig load_config(const std::string& path);

/// Reads a two-column CSV (y, value) covering [0, 1] and returns ny cosine
/// coefficients. Uniformly spaced rows are resampled spectrally after a
/// compatibility check; other layouts are interpolated linearly.
Eigen::VectorXd load_profile_csv(const std::string& path, int ny);

}  // namespace stratmhd::cli
