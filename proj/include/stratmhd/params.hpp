#pragma once

#include <numbers>

#include "stratmhd/spectral/grid.hpp"

namespace stratmhd {

/// Physical and numerical parameters shared by all modules.
struct Params {
  double kappa = 2.0;                       // velocity damping
  double c0 = 0.5 / std::numbers::pi;       // background field strength
  spectral::Grid grid{};                    // x-length and collocation counts
  int k_order = 7;                          // Sobolev order of the energy
  bool allow_low_order = false;             // permit k_order < 7

  /// Throws InvalidArgument when a range constraint is broken.
  void validate() const;
};

}  // namespace stratmhd
