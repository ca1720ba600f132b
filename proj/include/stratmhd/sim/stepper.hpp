#pragma once

#include "stratmhd/background/background.hpp"
#include "stratmhd/sim/rhs.hpp"
#include "stratmhd/sim/state.hpp"

namespace stratmhd::sim {

/// Fills s.cached_rhs if absent; returns the smallness flag at s.t.
RhsResult refresh_rhs(PerturbationState& s, const background::BackgroundModal& bg,
                      const SimConfig& cfg);

/// dt * (max|U| + max|B|) / min(dx, dy), with U and B including the background.
double cfl_number(const PerturbationState& s, const background::BackgroundModal& bg,
                  const SimConfig& cfg, double dt);

/// One RK4 step of size dt (cfg.dt if dt < 0). Plain RK4 or, with
/// cfg.integrating_factor, the Lawson variant that integrates the damping
/// exactly. Post-step: dealias, project, refresh cached_rhs.
/// Throws NumericalAbort on non-finite values or a CFL number >= 1.
PerturbationState step_rk4(const PerturbationState& s, const background::BackgroundModal& bg,
                           const SimConfig& cfg, double dt = -1.0);

}  // namespace stratmhd::sim
