#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

#include "stratmhd/fields.hpp"
#include "stratmhd/params.hpp"

namespace stratmhd::linear {

using cdouble = std::complex<double>;

/// Linearized dynamics of one Fourier mode (xi, q) in the variables
/// w = (u1_hat, -i u2_hat, rho_hat).
struct ModeMatrix {
  Eigen::Matrix3d a;
  double kappa = 0.0;
  double c0 = 0.0;
  double xi = 0.0;
  double k = 0.0;  // y-wavenumber q pi
  double delta = 0.0;
  cdouble lambda_plus, lambda_minus;
  double lambda_damp = 0.0;
};

ModeMatrix mode_matrix(double kappa, double c0, double xi, int q);
ModeMatrix mode_matrix(const Params& p, double xi, int q);

/// Closed-form e^{A t}.
Eigen::Matrix3d propagator(const ModeMatrix& m, double t);

struct ModeState {
  cdouble w1, w2, w3;

  Eigen::Vector3cd vec() const { return {w1, w2, w3}; }
  static ModeState from(const Eigen::Vector3cd& v) { return {v[0], v[1], v[2]}; }
};

ModeState apply(const Eigen::Matrix3d& e, const ModeState& w);

/// w(t+h) = e^{Ah} w + int_0^h e^{A(h-s)} Q(t+s) ds with Simpson's rule on
/// samples Q(t), Q(t+h/2), Q(t+h).
ModeState duhamel_step(const ModeState& w, const std::array<ModeState, 3>& forcing,
                       const ModeMatrix& m, double h);

/// c_kappa = -max_{q>=1} Re lambda_+(q), attained at q = 1.
double spectral_abscissa(double kappa, double c0);
double spectral_abscissa(const Params& p);

/// beta = min(alpha, c_kappa / 2).
double bootstrap_rate(double kappa, double c0);

/// Mode state of (slot, q) and its inverse. The Nyquist slot uses xi = 0.
ModeState extract_mode(const Fields& f, int slot, int q);
void insert_mode(Fields& f, int slot, int q, const ModeState& w);
double effective_xi(const spectral::Grid& g, int slot);

/// Exact linear evolution of every mode over time t.
Fields evolve_linear(const Fields& init, double kappa, double c0, double t);

}  // namespace stratmhd::linear
