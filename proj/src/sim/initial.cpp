#include "stratmhd/sim/initial.hpp"

#include <cmath>
#include <numbers>

#include "stratmhd/background/background.hpp"
#include "stratmhd/error.hpp"
#include "stratmhd/sim/state.hpp"
#include "stratmhd/spectral/ops.hpp"

namespace stratmhd::sim {

using spectral::Axis;
using spectral::cdouble;
using spectral::Grid;
using spectral::Parity;
using spectral::Spectrum;

namespace {

Spectrum random_spectrum(const Grid& g, Parity p, int k_order, Rng& rng) {
  Spectrum s(g, p);
  const int n = g.ymodes();
  const double decay = 0.5 * (k_order + 4);
  for (int q = 1; q < n; ++q) {
    for (int j = 0; j < g.nx / 2; ++j) {
      const int slot = g.slot(j);
      const double u = rng.uniform(-1.0, 1.0);
      const double v = rng.uniform(-1.0, 1.0);
      if (spectral::is_dealiased_mode(g, slot, q)) continue;
      const double K2 = g.xi(slot) * g.xi(slot) + Grid::kq(q) * Grid::kq(q);
      const double amp = std::pow(1.0 + K2, -decay);
      s.set_mode(j, q, amp * cdouble(u, j == 0 ? 0.0 : v));
    }
  }
  return s;
}

}  // namespace

double initial_size(const Fields& f, int k_order) {
  return std::sqrt(spectral::sobolev_norm_sq(f.u1, k_order) +
                   spectral::sobolev_norm_sq(f.u2, k_order)) +
         spectral::sobolev_norm(f.rho, k_order + 1);
}

Fields random_initial(const Grid& g, double epsilon0, int k_order, Rng& rng) {
  g.validate();
  if (!(epsilon0 >= 0.0)) throw InvalidArgument("epsilon0 must be non-negative");
  const Spectrum psi = random_spectrum(g, Parity::OddY, k_order, rng);
  const Spectrum rho = random_spectrum(g, Parity::EvenY, k_order + 1, rng);
  Fields f(spectral::differentiate(psi, Axis::Y), -spectral::differentiate(psi, Axis::X), rho);
  f = project_constraints(std::move(f));
  const double size = initial_size(f, k_order);
  if (size == 0.0) return f;
  f *= epsilon0 / size;
  return f;
}

Fields random_initial(const Grid& g, double epsilon0, int k_order, std::uint64_t seed) {
  Rng rng(seed);
  return random_initial(g, epsilon0, k_order, rng);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> random_background(int ny, double amplitude,
                                                               int k_order, Rng& rng) {
  if (ny < 3) throw InvalidArgument("random_background: ny must be >= 3");
  const int n = ny - 1;
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(ny), psi = Eigen::VectorXd::Zero(ny);
  const double decay = 0.5 * (k_order + 5);
  for (int m = 1; 3 * m <= 2 * n; ++m) {
    const double k2 = m * m * std::numbers::pi * std::numbers::pi;
    const double env = std::pow(1.0 + k2, -decay) / std::pow(1.0 + std::numbers::pi * std::numbers::pi, -decay);
    phi[m] = env * rng.uniform(-1.0, 1.0);
    psi[m] = env * rng.uniform(-1.0, 1.0);
  }
  const double size = background::YSeries(Parity::EvenY, phi).sobolev_norm(0) +
                      background::YSeries(Parity::EvenY, psi).sobolev_norm(0);
  if (size > 0.0) {
    phi *= amplitude / size;
    psi *= amplitude / size;
  }
  return {phi, psi};
}

}  // namespace stratmhd::sim
