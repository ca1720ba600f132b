#pragma once

#include <functional>

#include "stratmhd/background/background.hpp"
#include "stratmhd/fields.hpp"
#include "stratmhd/params.hpp"

namespace stratmhd::sim {

/// Smallness threshold on ||d_x rho||_{H^2}.
inline constexpr double kSmallnessBound = 0.25;

struct RhsOptions {
  bool dealias = true;
  std::function<Fields(double)> source;
};

struct RhsResult {
  Fields dt;
  double smallness = 0.0;  // ||d_x rho||_{H^2}
  bool smallness_ok = true;
};

/// Full perturbation right-hand side at time t: pseudo-spectral products,
/// Leray projection of the momentum, zero y-means of u1 and rho.
/// Throws NumericalAbort on non-finite input or output.
RhsResult rhs(const Fields& s, double t, const background::BackgroundModal& bg, const Params& p,
              const RhsOptions& opt = {});

/// Same, with the background profiles already evaluated at t.
RhsResult rhs(const Fields& s, double t, const background::Profiles& bg, const Params& p,
              const RhsOptions& opt = {});

/// Linear part around the trivial background (no products).
Fields linear_rhs(const Fields& s, const Params& p);

/// ||d_x rho||_{H^2}.
double smallness_measure(const Fields& s);

/// Difference between the full Leray pressure and the truncated formula that
/// keeps only the convective, shear, Psi-advection and Lorentz terms, and the
/// norm of the divergence of the omitted terms (-2 phi_yy rho_xx).
struct PressureGap {
  double pressure_difference = 0.0;
  double omitted_divergence = 0.0;
};

PressureGap pressure_truncation_gap(const Fields& s, const background::Profiles& bg,
                                    const Params& p);

}  // namespace stratmhd::sim
