#include <algorithm>
#include <cmath>

#include "stratmhd/background/background.hpp"
#include "stratmhd/damped.hpp"
#include "stratmhd/error.hpp"
#include "stratmhd/linear/linear.hpp"

namespace stratmhd::linear {

ModeMatrix mode_matrix(double kappa, double c0, double xi, int q) {
  if (q < 0) throw InvalidArgument("mode_matrix: q must be non-negative");
  ModeMatrix m;
  m.kappa = kappa;
  m.c0 = c0;
  m.xi = xi;
  m.k = spectral::Grid::kq(q);
  const double k = m.k;
  m.a << -kappa, 0.0, c0 * k * k,
         0.0, -kappa, -c0 * xi * k,
         -c0, 0.0, 0.0;
  m.delta = kappa * kappa - 4.0 * c0 * c0 * k * k;
  const cdouble root = std::sqrt(cdouble(m.delta));
  m.lambda_plus = 0.5 * (-kappa + root);
  m.lambda_minus = 0.5 * (-kappa - root);
  m.lambda_damp = -kappa;
  return m;
}

ModeMatrix mode_matrix(const Params& p, double xi, int q) {
  return mode_matrix(p.kappa, p.c0, xi, q);
}

Eigen::Matrix3d propagator(const ModeMatrix& m, double t) {
  if (t < 0.0) throw InvalidArgument("propagator requires t >= 0");
  const double k = m.k, c0 = m.c0, kappa = m.kappa;
  const DampedBasis b = damped_basis(kappa, c0 * c0 * k * k, t);
  const double damp = std::exp(-kappa * t);
  Eigen::Matrix3d e = Eigen::Matrix3d::Zero();
  e(0, 0) = b.even - 0.5 * kappa * b.odd;
  e(0, 2) = c0 * k * k * b.odd;
  e(2, 0) = -c0 * b.odd;
  e(2, 2) = b.even + 0.5 * kappa * b.odd;
  e(1, 1) = damp;
  if (k != 0.0) {
    // z = w2 + (xi/k) w1 obeys z' = -kappa z.
    const double r = m.xi / k;
    e(1, 0) = r * (damp - e(0, 0));
    e(1, 2) = -r * e(0, 2);
  }
  return e;
}

double spectral_abscissa(double kappa, double c0) {
  if (!(kappa > 0.0)) throw InvalidArgument("kappa must be positive");
  const double w2 = c0 * c0 * std::numbers::pi * std::numbers::pi;
  const double delta = kappa * kappa - 4.0 * w2;
  if (delta <= 0.0) return 0.5 * kappa;
  return 2.0 * w2 / (kappa + std::sqrt(delta));
}

double spectral_abscissa(const Params& p) { return spectral_abscissa(p.kappa, p.c0); }

double bootstrap_rate(double kappa, double c0) {
  return std::min(background::background_decay_rate(kappa, c0),
                  0.5 * spectral_abscissa(kappa, c0));
}

}  // namespace stratmhd::linear
