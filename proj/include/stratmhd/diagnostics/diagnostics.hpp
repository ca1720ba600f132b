#pragma once

#include <vector>

#include "stratmhd/background/background.hpp"
#include "stratmhd/sim/state.hpp"

namespace stratmhd::diagnostics {

struct EnergyReport {
  double t = 0.0;
  double E_k = 0.0;
  double E_4 = 0.0;
  double Gamma_kp1 = 0.0;  // NaN when the weight 1 + d_x rho is not positive
  double norm_u_Hk = 0.0;
  double norm_dtu_Hk = 0.0;
  double norm_rho_Hkp1 = 0.0;
  double norm_dtrho_Hkp1 = 0.0;
  bool smallness_ok = true;
  double smallness = 0.0;
  bool weight_positive = true;
  double bg_phi_norm = 0.0;  // ||phi||_{H^{k+3}}
  double bg_psi_norm = 0.0;  // ||psi||_{H^{k+2}}
  double divergence = 0.0;
};

/// E_k with the time derivatives taken from s.cached_rhs.
/// Throws InvalidArgument when the cache is missing.
double energy_Ek(const sim::PerturbationState& s, int k);

/// Gamma_k = (1/2 int (1 + d_x rho)(|grad^k u|^2 + |grad^k grad_perp rho|^2))^{1/2}
/// by trapezoid quadrature on a grid refined twice in each direction.
/// Throws HypothesisViolation when 1 + d_x rho <= 0 somewhere.
double weighted_gamma(const sim::PerturbationState& s, int k);

/// Full report at s.t; Gamma failures are recorded, not thrown.
EnergyReport energy_report(const sim::PerturbationState& s,
                           const background::BackgroundModal& bg, int k);

enum class Identity {
  QuadraticC0,       // order-0 C0 coupling
  Commutator,        // order-k Lorentz/transport commutator
  BackgroundShear,   // order-k d_y phi coupling
  BackgroundShearDt  // the same on time derivatives (needs cached_rhs)
};

const char* to_string(Identity id);

struct CancellationResult {
  double residual = 0.0;  // |sum of terms|
  double scale = 0.0;     // sum of |terms|
  double relative() const { return scale > 0.0 ? residual / scale : 0.0; }
};

CancellationResult cancellation_check(const sim::PerturbationState& s,
                                      const background::BackgroundModal& bg, Identity which,
                                      double c0, int k);

struct DecayFit {
  double rate = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
  double t_start = 0.0;
  double t_end = 0.0;
  int samples = 0;
};

/// Least squares on (t, log v) inside [t_start, t_end]; rate = -slope.
/// Throws InvalidArgument on non-positive samples or fewer than 5 samples.
DecayFit fit_decay(const std::vector<double>& t, const std::vector<double>& v, double t_start,
                   double t_end);

struct BootstrapReport {
  bool bound_satisfied = true;
  double max_ratio = 0.0;
};

/// max_t E_4(t) / (4 M0 e^{-beta t}).
BootstrapReport bootstrap_monitor(const std::vector<double>& t, const std::vector<double>& e4,
                                  double m0, double beta);

/// ||phi0||_{H^{k+3}} + ||psi0||_{H^{k+3}} on [0, 1].
double bootstrap_m0(const background::BackgroundModal& bg, int k);

/// max over interior samples of |dE_k^2/dt| / ((E_k^2 + Gamma^2)(E_4 + bg norms)),
/// with centered differences; NaN-safe (skips undefined samples).
double differential_monitor(const std::vector<EnergyReport>& rows);

}  // namespace stratmhd::diagnostics
