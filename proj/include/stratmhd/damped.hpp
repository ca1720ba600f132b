#pragma once

namespace stratmhd {

/// Fundamental pair for f'' + kappa f' + w2 f = 0 with w2 >= 0:
///   even(t) = e^{-kappa t/2} cosh(s t),  odd(t) = e^{-kappa t/2} sinh(s t)/s,
/// where s^2 = delta/4 and delta = kappa^2 - 4 w2. Both are analytic in delta
/// and are evaluated without division by sqrt(delta) near delta = 0.
struct DampedBasis {
  double even = 1.0;
  double odd = 0.0;
};

DampedBasis damped_basis(double kappa, double w2, double t);

/// f(t) and f'(t) for f(0) = f0, f'(0) = v0.
struct DampedValue {
  double value;
  double rate;
};

DampedValue damped_solution(double kappa, double w2, double f0, double v0, double t);

}  // namespace stratmhd
