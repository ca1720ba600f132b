#include "stratmhd/background/background.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stratmhd/damped.hpp"
#include "stratmhd/error.hpp"

namespace stratmhd::background {
namespace {

constexpr double kPi = std::numbers::pi;

double mode_w2(double c0, int m) { return c0 * c0 * m * m * kPi * kPi; }

}  // namespace

double YSeries::operator()(double y) const {
  double v = 0.0;
  for (int q = 0; q < coeffs.size(); ++q) {
    v += coeffs[q] * (parity == Parity::EvenY ? std::cos(q * kPi * y) : std::sin(q * kPi * y));
  }
  return v;
}

Eigen::ArrayXd YSeries::sample(int ny) const {
  Eigen::ArrayXd out(ny);
  for (int m = 0; m < ny; ++m) out[m] = (*this)(static_cast<double>(m) / (ny - 1));
  return out;
}

YSeries YSeries::derivative() const {
  YSeries d(spectral::flip(parity), Eigen::VectorXd::Zero(coeffs.size()));
  for (int q = 1; q < coeffs.size(); ++q) {
    d.coeffs[q] = (parity == Parity::EvenY ? -1.0 : 1.0) * q * kPi * coeffs[q];
  }
  return d;
}

double YSeries::sobolev_norm(int k) const {
  double total = 0.0;
  for (int q = 0; q < coeffs.size(); ++q) {
    if (parity == Parity::OddY && q == 0) continue;
    const double w = q == 0 ? 1.0 : 0.5;
    const double k2 = q * q * kPi * kPi;
    double weight = 0.0, p = 1.0;
    for (int b = 0; b <= k; ++b) {
      weight += p;
      p *= k2;
    }
    total += w * coeffs[q] * coeffs[q] * weight;
  }
  return std::sqrt(total);
}

Eigen::VectorXd cosine_coefficients(const Eigen::VectorXd& samples) {
  const int ny = static_cast<int>(samples.size());
  if (ny < 3) throw InvalidArgument("need at least 3 samples");
  const int n = ny - 1;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(ny);
  for (int q = 0; q <= n; ++q) {
    double s = 0.0;
    for (int m = 0; m <= n; ++m) {
      const double w = (m == 0 || m == n) ? 0.5 : 1.0;
      s += w * samples[m] * std::cos(kPi * q * m / n);
    }
    c[q] = (q == 0 || q == n) ? s / n : 2.0 * s / n;
  }
  return c;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Overdamped: return "overdamped";
    case Regime::Critical: return "critical";
    case Regime::Underdamped: return "underdamped";
  }
  return "?";
}

Regime classify(double kappa, double delta) {
  if (std::abs(delta) < kCriticalTolerance * kappa * kappa) return Regime::Critical;
  return delta > 0.0 ? Regime::Overdamped : Regime::Underdamped;
}

BackgroundModal init_background(const Eigen::VectorXd& phi0, const Eigen::VectorXd& psi0,
                                double kappa, double c0) {
  if (!(kappa > 0.0)) throw InvalidArgument("kappa must be positive");
  if (c0 == 0.0 || !std::isfinite(c0)) throw InvalidArgument("c0 must be nonzero");
  if (phi0.size() != psi0.size()) {
    throw InvalidArgument("phi0 and psi0 coefficient arrays differ in length (" +
                          std::to_string(phi0.size()) + " vs " + std::to_string(psi0.size()) +
                          ")");
  }
  if (!phi0.allFinite() || !psi0.allFinite()) {
    throw InvalidArgument("non-finite background coefficient");
  }
  BackgroundModal b{kappa, c0, {}};
  b.modes.resize(phi0.size());
  for (int m = 0; m < phi0.size(); ++m) {
    ModeSolution& ms = b.modes[m];
    ms.c = phi0[m];
    ms.d = psi0[m];
    ms.delta = kappa * kappa - 4.0 * mode_w2(c0, m);
    ms.regime = classify(kappa, ms.delta);
    const double v = -c0 * ms.d;
    const std::complex<double> root = std::sqrt(std::complex<double>(ms.delta));
    if (ms.regime == Regime::Critical) {
      ms.gamma1 = ms.gamma2 = -0.5 * kappa;
      ms.amp_a = ms.c;
      ms.amp_b = v + 0.5 * kappa * ms.c;
    } else {
      ms.gamma1 = 0.5 * (-kappa + root);
      ms.gamma2 = 0.5 * (-kappa - root);
      ms.amp_a = (v - ms.gamma2 * ms.c) / (ms.gamma1 - ms.gamma2);
      ms.amp_b = (ms.gamma1 * ms.c - v) / (ms.gamma1 - ms.gamma2);
    }
  }
  return b;
}

BackgroundModal init_background(const Eigen::VectorXd& phi0, const Eigen::VectorXd& psi0,
                                const Params& p) {
  if (phi0.size() != p.grid.ny) {
    throw InvalidArgument("background coefficient arrays must have n_y entries");
  }
  return init_background(phi0, psi0, p.kappa, p.c0);
}

BackgroundModal zero_background(int n, double kappa, double c0) {
  return init_background(Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n), kappa, c0);
}

ModeValue eval_mode(const BackgroundModal& b, int m, double t) {
  const ModeSolution& ms = b.modes.at(m);
  if (ms.c == 0.0 && ms.d == 0.0) return {0.0, 0.0};
  const DampedValue v = damped_solution(b.kappa, mode_w2(b.c0, m), ms.c, -b.c0 * ms.d, t);
  return {v.value, v.rate};
}

double eval_mode_amplitudes(const BackgroundModal& b, int m, double t) {
  const ModeSolution& ms = b.modes.at(m);
  if (ms.regime == Regime::Critical) {
    return ((ms.amp_a + ms.amp_b * t) * std::exp(-0.5 * b.kappa * t)).real();
  }
  return (ms.amp_a * std::exp(ms.gamma1 * t) + ms.amp_b * std::exp(ms.gamma2 * t)).real();
}

Profiles eval_background(const BackgroundModal& b, double t) {
  if (t < 0.0) throw InvalidArgument("eval_background requires t >= 0");
  const int n = b.size();
  Eigen::VectorXd phi(n), psi(n);
  for (int m = 0; m < n; ++m) {
    const ModeValue v = eval_mode(b, m, t);
    phi[m] = v.phi;
    psi[m] = -v.dphi_dt / b.c0;
  }
  Profiles p;
  p.phi = YSeries(Parity::EvenY, phi);
  p.psi = YSeries(Parity::EvenY, psi);
  p.dphi = p.phi.derivative();
  p.d2phi = p.dphi.derivative();
  p.dpsi = p.psi.derivative();
  return p;
}

double background_decay_rate(double kappa, double c0) {
  // (kappa - sqrt(delta_m))/2 increases with m, so the minimum sits at m = 1.
  const double delta = kappa * kappa - 4.0 * mode_w2(c0, 1);
  if (classify(kappa, delta) != Regime::Overdamped) return kappa / 4.0;
  const double alpha0 = 2.0 * mode_w2(c0, 1) / (kappa + std::sqrt(delta));
  return std::min(alpha0, kappa / 4.0);
}

double background_decay_rate(const Params& p) { return background_decay_rate(p.kappa, p.c0); }

bool check_compatibility(const Eigen::VectorXd& cosine_coeffs) {
  (void)cosine_coeffs;
  return true;
}

bool check_compatibility_samples(const Eigen::VectorXd& samples) {
  const Eigen::VectorXd c = cosine_coefficients(samples);
  const int n = static_cast<int>(c.size()) - 1;
  const double norm = YSeries(Parity::EvenY, c).sobolev_norm(0);
  if (norm == 0.0) return true;
  double tail = 0.0;
  for (int q = (n + 1) / 2; q < n; ++q) {
    tail = std::max(tail, 0.5 * q * q * kPi * kPi * std::abs(c[q]));
  }
  return tail < 1e-8 * norm;
}

}  // namespace stratmhd::background
