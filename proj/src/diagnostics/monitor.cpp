#include <algorithm>
#include <cmath>

#include "stratmhd/diagnostics/diagnostics.hpp"
#include "stratmhd/error.hpp"

namespace stratmhd::diagnostics {

BootstrapReport bootstrap_monitor(const std::vector<double>& t, const std::vector<double>& e4,
                                  double m0, double beta) {
  if (!(m0 > 0.0)) throw InvalidArgument("bootstrap_monitor: M0 must be positive");
  if (!(beta > 0.0)) throw InvalidArgument("bootstrap_monitor: beta must be positive");
  if (t.size() != e4.size()) throw InvalidArgument("bootstrap_monitor: series lengths differ");
  BootstrapReport r;
  for (size_t i = 0; i < t.size(); ++i) {
    r.max_ratio = std::max(r.max_ratio, e4[i] / (4.0 * m0 * std::exp(-beta * t[i])));
  }
  r.bound_satisfied = r.max_ratio <= 1.0 + 1e-12;
  return r;
}

double bootstrap_m0(const background::BackgroundModal& bg, int k) {
  const auto prof = background::eval_background(bg, 0.0);
  return prof.phi.sobolev_norm(k + 3) + prof.psi.sobolev_norm(k + 3);
}

double differential_monitor(const std::vector<EnergyReport>& rows) {
  double worst = 0.0;
  for (size_t i = 1; i + 1 < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    const auto& c = rows[i + 1];
    const double dt = c.t - a.t;
    if (!(dt > 0.0) || !std::isfinite(b.Gamma_kp1)) continue;
    const double deriv = (c.E_k * c.E_k - a.E_k * a.E_k) / dt;
    const double denom = (b.E_k * b.E_k + b.Gamma_kp1 * b.Gamma_kp1) *
                         (b.E_4 + b.bg_phi_norm + b.bg_psi_norm);
    if (!(denom > 0.0)) continue;
    worst = std::max(worst, std::abs(deriv) / denom);
  }
  return worst;
}

}  // namespace stratmhd::diagnostics
