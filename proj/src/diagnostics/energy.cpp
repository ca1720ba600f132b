#include <cmath>
#include <limits>

#include "stratmhd/diagnostics/diagnostics.hpp"
#include "stratmhd/error.hpp"
#include "stratmhd/sim/rhs.hpp"
#include "stratmhd/spectral/ops.hpp"
#include "stratmhd/spectral/transform.hpp"

namespace stratmhd::diagnostics {

using spectral::Axis;
using spectral::Spectrum;

namespace {

const Fields& require_cache(const sim::PerturbationState& s) {
  if (!s.cached_rhs) throw InvalidArgument("energy needs the cached right-hand side");
  return *s.cached_rhs;
}

double velocity_norm_sq(const Fields& f, int k) {
  return spectral::sobolev_norm_sq(f.u1, k) + spectral::sobolev_norm_sq(f.u2, k);
}

Eigen::ArrayXXd fine_values(const Spectrum& s, const spectral::Grid& fine) {
  return spectral::inverse(spectral::pad_to(s, fine)).values;
}

}  // namespace

double energy_Ek(const sim::PerturbationState& s, int k) {
  const Fields& d = require_cache(s);
  const Fields& f = s.fields;
  const double sum = velocity_norm_sq(f, k) + velocity_norm_sq(d, k) +
                     spectral::sobolev_norm_sq(f.rho, k + 1) +
                     spectral::sobolev_norm_sq(d.rho, k + 1);
  return std::sqrt(0.5 * sum);
}

double weighted_gamma(const sim::PerturbationState& s, int k) {
  const Fields& f = s.fields;
  const spectral::Grid fine = f.grid().refined();
  const Spectrum rx = spectral::differentiate(f.rho, Axis::X);
  const Spectrum ry = spectral::differentiate(f.rho, Axis::Y);
  const Eigen::ArrayXXd weight = 1.0 + fine_values(rx, fine);
  if (weight.minCoeff() <= 0.0) {
    throw HypothesisViolation("weight 1 + d_x rho is not positive");
  }
  Eigen::ArrayXXd density = Eigen::ArrayXXd::Zero(fine.nx, fine.ny);
  for (int a = 0; a <= k; ++a) {
    const int b = k - a;
    for (const Spectrum* src : {&f.u1, &f.u2, &rx, &ry}) {
      density += fine_values(spectral::partial(*src, a, b), fine).square();
    }
  }
  spectral::GridField integrand(fine, spectral::Parity::EvenY, weight * density);
  return std::sqrt(0.5 * spectral::integrate(integrand));
}

EnergyReport energy_report(const sim::PerturbationState& s,
                           const background::BackgroundModal& bg, int k) {
  const Fields& d = require_cache(s);
  const Fields& f = s.fields;
  EnergyReport r;
  r.t = s.t;
  r.norm_u_Hk = std::sqrt(velocity_norm_sq(f, k));
  r.norm_dtu_Hk = std::sqrt(velocity_norm_sq(d, k));
  r.norm_rho_Hkp1 = spectral::sobolev_norm(f.rho, k + 1);
  r.norm_dtrho_Hkp1 = spectral::sobolev_norm(d.rho, k + 1);
  r.E_k = std::sqrt(0.5 * (r.norm_u_Hk * r.norm_u_Hk + r.norm_dtu_Hk * r.norm_dtu_Hk +
                           r.norm_rho_Hkp1 * r.norm_rho_Hkp1 +
                           r.norm_dtrho_Hkp1 * r.norm_dtrho_Hkp1));
  r.E_4 = energy_Ek(s, 4);
  try {
    r.Gamma_kp1 = weighted_gamma(s, k + 1);
  } catch (const HypothesisViolation&) {
    r.Gamma_kp1 = std::numeric_limits<double>::quiet_NaN();
    r.weight_positive = false;
  }
  r.smallness = sim::smallness_measure(f);
  r.smallness_ok = r.smallness < sim::kSmallnessBound;
  const background::Profiles prof = background::eval_background(bg, s.t);
  r.bg_phi_norm = prof.phi.sobolev_norm(k + 3);
  r.bg_psi_norm = prof.psi.sobolev_norm(k + 2);
  r.divergence = sim::divergence_residual(f);
  return r;
}

}  // namespace stratmhd::diagnostics
