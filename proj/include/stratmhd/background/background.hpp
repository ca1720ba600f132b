#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "stratmhd/params.hpp"
#include "stratmhd/spectral/grid.hpp"

namespace stratmhd::background {

using spectral::Parity;

/// One-dimensional profile in y: sum_q coeffs[q] cos(q pi y) (EvenY) or
/// sin(q pi y) (OddY).
struct YSeries {
  Parity parity = Parity::EvenY;
  Eigen::VectorXd coeffs;

  YSeries() = default;
  YSeries(Parity p, Eigen::VectorXd c) : parity(p), coeffs(std::move(c)) {}

  double operator()(double y) const;
  /// Values at the collocation points of a grid with ny points.
  Eigen::ArrayXd sample(int ny) const;
  YSeries derivative() const;
  /// H^k norm on [0, 1] with the full derivative sum.
  double sobolev_norm(int k) const;
};

/// Cosine coefficients (length ny) of samples at y_m = m/(ny-1).
Eigen::VectorXd cosine_coefficients(const Eigen::VectorXd& samples);

enum class Regime { Overdamped, Critical, Underdamped };

const char* to_string(Regime r);

/// Closed-form solution of one y-mode of phi'' + kappa phi' + (c0 m pi)^2 phi = 0.
struct ModeSolution {
  Regime regime = Regime::Overdamped;
  double delta = 0.0;
  std::complex<double> gamma1, gamma2;
  // phi_m(t) = A e^{gamma1 t} + B e^{gamma2 t} (Critical: (A + B t) e^{-kappa t/2}).
  std::complex<double> amp_a, amp_b;
  double c = 0.0;  // phi_m(0)
  double d = 0.0;  // psi_m(0); phi_m'(0) = -c0 d
};

struct BackgroundModal {
  double kappa = 0.0;
  double c0 = 0.0;
  std::vector<ModeSolution> modes;

  int size() const { return static_cast<int>(modes.size()); }
};

/// Relative tolerance on delta / kappa^2 below which a mode is Critical.
inline constexpr double kCriticalTolerance = 1e-9;

Regime classify(double kappa, double delta);

BackgroundModal init_background(const Eigen::VectorXd& phi0, const Eigen::VectorXd& psi0,
                                double kappa, double c0);
BackgroundModal init_background(const Eigen::VectorXd& phi0, const Eigen::VectorXd& psi0,
                                const Params& p);

/// Trivial background with n modes.
BackgroundModal zero_background(int n, double kappa, double c0);

/// phi_m(t) and d/dt phi_m(t).
struct ModeValue {
  double phi;
  double dphi_dt;
};

ModeValue eval_mode(const BackgroundModal& b, int m, double t);

/// Amplitude-form evaluation (A e^{gamma1 t} + B e^{gamma2 t}); reference only.
double eval_mode_amplitudes(const BackgroundModal& b, int m, double t);

struct Profiles {
  YSeries phi;      // EvenY
  YSeries psi;      // EvenY
  YSeries dphi;     // OddY, d/dy phi
  YSeries d2phi;    // EvenY
  YSeries dpsi;     // OddY
};

Profiles eval_background(const BackgroundModal& b, double t);

/// alpha = min(alpha0, kappa/4), alpha0 over strictly overdamped modes m >= 1.
double background_decay_rate(double kappa, double c0);
double background_decay_rate(const Params& p);

/// Coefficient data is compatible by construction.
bool check_compatibility(const Eigen::VectorXd& cosine_coeffs);

/// Grid data: estimates the boundary first derivative from the cosine tail
/// and compares against 1e-8 times the data norm.
bool check_compatibility_samples(const Eigen::VectorXd& samples);

}  // namespace stratmhd::background
