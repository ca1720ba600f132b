#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stratmhd/background/background.hpp"
#include "stratmhd/diagnostics/diagnostics.hpp"
#include "stratmhd/sim/state.hpp"

namespace stratmhd::sim {

enum class Termination { Completed, NumericalAbort, SmallnessViolation };

const char* to_string(Termination t);

struct Trajectory {
  std::vector<diagnostics::EnergyReport> reports;
  Termination termination = Termination::Completed;
  std::string message;
  std::optional<double> first_smallness_violation;
  double max_divergence = 0.0;  // over every accepted step
  PerturbationState final_state;
};

/// Called at every output step (including t = 0) with the live state.
using Observer = std::function<void(const PerturbationState&)>;

/// Steps init to cfg.t_end, reporting every cfg.output_stride steps and at the
/// final time. Stops early on a non-finite state or a smallness violation.
Trajectory run(const SimConfig& cfg, const background::BackgroundModal& bg,
               const PerturbationState& init, const Observer& observer = {});

}  // namespace stratmhd::sim
