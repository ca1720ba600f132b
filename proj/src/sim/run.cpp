#include "stratmhd/sim/run.hpp"

#include <algorithm>
#include <cmath>

#include "stratmhd/error.hpp"
#include "stratmhd/sim/stepper.hpp"

namespace stratmhd::sim {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::Completed: return "completed";
    case Termination::NumericalAbort: return "numerical_abort";
    case Termination::SmallnessViolation: return "smallness_violation";
  }
  return "?";
}

Trajectory run(const SimConfig& cfg, const background::BackgroundModal& bg,
               const PerturbationState& init, const Observer& observer) {
  cfg.validate();
  const int k = cfg.params.k_order;
  Trajectory traj;
  PerturbationState s = init;
  const long steps = std::max(1L, std::lround((cfg.t_end - init.t) / cfg.dt));

  auto emit = [&](const PerturbationState& cur) {
    traj.reports.push_back(diagnostics::energy_report(cur, bg, k));
    if (observer) observer(cur);
    const auto& r = traj.reports.back();
    if (!r.smallness_ok) {
      traj.first_smallness_violation = cur.t;
      traj.termination = Termination::SmallnessViolation;
      traj.message = "smallness condition violated at t=" + std::to_string(cur.t);
      return false;
    }
    return true;
  };

  try {
    refresh_rhs(s, bg, cfg);
    traj.max_divergence = divergence_residual(s.fields);
    if (!emit(s)) {
      traj.final_state = s;
      return traj;
    }
    for (long n = 1; n <= steps; ++n) {
      const double h = (n == steps) ? (cfg.t_end - s.t) : cfg.dt;
      s = step_rk4(s, bg, cfg, h);
      traj.max_divergence = std::max(traj.max_divergence, divergence_residual(s.fields));
      if (sim::smallness_measure(s.fields) >= kSmallnessBound || n % cfg.output_stride == 0 ||
          n == steps) {
        if (!emit(s)) break;
      }
    }
  } catch (const NumericalAbort& e) {
    traj.termination = Termination::NumericalAbort;
    traj.message = e.what();
  }
  traj.final_state = s;
  return traj;
}

}  // namespace stratmhd::sim
