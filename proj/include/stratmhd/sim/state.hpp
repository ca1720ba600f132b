#pragma once

#include <functional>
#include <optional>

#include "stratmhd/fields.hpp"
#include "stratmhd/params.hpp"

namespace stratmhd::sim {

struct PerturbationState {
  Fields fields;
  double t = 0.0;
  std::optional<Fields> cached_rhs;  // time derivative at t
};

struct SimConfig {
  Params params;
  double dt = 0.01;
  double t_end = 1.0;
  bool dealias = true;
  int output_stride = 10;
  double epsilon0 = 1e-3;
  bool integrating_factor = false;
  // Optional forcing added to the right-hand side before projection.
  std::function<Fields(double)> source;

  void validate() const;
};

/// Divergence iξ u1 + ∂y u2 as an EvenY spectrum.
spectral::Spectrum divergence(const Fields& f);

/// ||div u||_{L2} / ||u||_{H1} (0 for a zero field).
double divergence_residual(const Fields& f);

/// Pressure that removes the divergence of (r1, r2):
/// P = -(i xi r1 + d_y r2)/(xi^2 + k^2), P(0,0) = 0.
spectral::Spectrum pressure_solve(const spectral::Spectrum& r1, const spectral::Spectrum& r2);

/// (r1, r2) - grad P.
void leray_project(spectral::Spectrum& r1, spectral::Spectrum& r2);

/// Zero y-means of u1 and rho, divergence-free velocity. Idempotent.
Fields project_constraints(Fields f);

}  // namespace stratmhd::sim
