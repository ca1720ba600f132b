#include "stratmhd/damped.hpp"

#include <cmath>

namespace stratmhd {

DampedBasis damped_basis(double kappa, double w2, double t) {
  const double delta = kappa * kappa - 4.0 * w2;
  const double z = 0.25 * delta * t * t;
  const double decay = std::exp(-0.5 * kappa * t);
  if (std::abs(z) < 1.0) {
    // cosh(sqrt z) and sinh(sqrt z)/sqrt z as power series in z.
    double ch = 0.0, sh = 0.0, term_c = 1.0, term_s = 1.0;
    for (int n = 0; n < 30; ++n) {
      ch += term_c;
      sh += term_s;
      term_c *= z / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
      term_s *= z / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
      if (std::abs(term_c) < 1e-18 * std::abs(ch) && std::abs(term_s) < 1e-18 * std::abs(sh)) {
        break;
      }
    }
    return {decay * ch, decay * sh * t};
  }
  if (z > 0.0) {
    const double root = std::sqrt(delta);
    const double g2 = -0.5 * (kappa + root);
    const double g1 = w2 / g2;
    const double e1 = std::exp(g1 * t), e2 = std::exp(g2 * t);
    return {0.5 * (e1 + e2), (e1 - e2) / root};
  }
  const double omega = 0.5 * std::sqrt(-delta);
  return {decay * std::cos(omega * t), decay * std::sin(omega * t) / omega};
}

DampedValue damped_solution(double kappa, double w2, double f0, double v0, double t) {
  const DampedBasis b = damped_basis(kappa, w2, t);
  const double s2 = 0.25 * (kappa * kappa - 4.0 * w2);
  const double drift = v0 + 0.5 * kappa * f0;
  return {f0 * b.even + drift * b.odd,
          v0 * b.even + (f0 * s2 - 0.5 * kappa * drift) * b.odd};
}

}  // namespace stratmhd
