#pragma once

#include <functional>

#include <Eigen/Core>

#include "stratmhd/spectral/spectrum.hpp"

namespace stratmhd::oracle {

/// Reference implementations used only to validate the production code.

struct OdeProblem {
  int dimension = 0;
  std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)> rhs;
  Eigen::VectorXd y0;
  double t0 = 0.0;
  double t1 = 0.0;
};

/// Fixed-step classical RK4; the last step is shortened to land on t1.
Eigen::VectorXd rk4_reference(const OdeProblem& p, double dt);

/// exp(M t) by Pade(6,6) scaling and squaring.
Eigen::MatrixXd expm_reference(const Eigen::MatrixXd& m, double t);

/// H^k norm from 4th-order finite differences (periodic in x, parity
/// reflection across y = 0, 1) and trapezoid quadrature.
double quadrature_norm(const spectral::GridField& f, int k);

/// Single derivative d/dx or d/dy by 4th-order centered differences.
spectral::GridField fd_derivative(const spectral::GridField& f, bool along_y);

}  // namespace stratmhd::oracle
