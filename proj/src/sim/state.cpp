#include "stratmhd/sim/state.hpp"

#include <cmath>

#include "stratmhd/error.hpp"
#include "stratmhd/linear/linear.hpp"
#include "stratmhd/spectral/ops.hpp"

namespace stratmhd::sim {

using spectral::Axis;
using spectral::cdouble;
using spectral::Grid;
using spectral::Parity;
using spectral::Spectrum;

void SimConfig::validate() const {
  params.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be positive");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw InvalidArgument("t_end must be positive");
  if (output_stride < 1) throw InvalidArgument("output_stride must be >= 1");
  if (!(epsilon0 >= 0.0)) throw InvalidArgument("epsilon0 must be non-negative");
}

Spectrum divergence(const Fields& f) {
  return spectral::differentiate(f.u1, Axis::X) + spectral::differentiate(f.u2, Axis::Y);
}

double divergence_residual(const Fields& f) {
  const double scale =
      std::sqrt(spectral::sobolev_norm_sq(f.u1, 1) + spectral::sobolev_norm_sq(f.u2, 1));
  if (scale == 0.0) return 0.0;
  return spectral::sobolev_norm(divergence(f), 0) / scale;
}

Spectrum pressure_solve(const Spectrum& r1, const Spectrum& r2) {
  if (r1.parity != Parity::EvenY || r2.parity != Parity::OddY || !(r1.grid == r2.grid)) {
    throw InvalidArgument("pressure_solve expects (EvenY, OddY) components on one grid");
  }
  const Grid& g = r1.grid;
  Spectrum p(g, Parity::EvenY);
  const int n = g.ymodes();
  const cdouble i1(0.0, 1.0);
  for (int q = 0; q <= n; ++q) {
    const double k = Grid::kq(q);
    for (int slot = 0; slot < g.nx; ++slot) {
      const double xi = linear::effective_xi(g, slot);
      const double lap = xi * xi + k * k;
      if (lap == 0.0) continue;
      const cdouble div = i1 * xi * r1.coeffs(slot, q) + k * r2.coeffs(slot, q);
      p.coeffs(slot, q) = -div / lap;
    }
  }
  return p;
}

void leray_project(Spectrum& r1, Spectrum& r2) {
  const Spectrum p = pressure_solve(r1, r2);
  const Grid& g = r1.grid;
  const int n = g.ymodes();
  const cdouble i1(0.0, 1.0);
  for (int q = 0; q <= n; ++q) {
    const double k = Grid::kq(q);
    for (int slot = 0; slot < g.nx; ++slot) {
      const double xi = linear::effective_xi(g, slot);
      r1.coeffs(slot, q) -= i1 * xi * p.coeffs(slot, q);
      if (q > 0 && q < n) {
        r2.coeffs(slot, q) += k * p.coeffs(slot, q);
      } else if (q == n && xi != 0.0) {
        // No sine partner at q = N: the divergence-free part of u1 there is zero.
        r1.coeffs(slot, q) = 0.0;
      }
    }
  }
}

Fields project_constraints(Fields f) {
  f.u1.coeffs.col(0).setZero();
  f.rho.coeffs.col(0).setZero();
  leray_project(f.u1, f.u2);
  return f;
}

}  // namespace stratmhd::sim
