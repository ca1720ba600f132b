#include "stratmhd/sim/rhs.hpp"

#include <cmath>

#include "stratmhd/error.hpp"
#include "stratmhd/sim/state.hpp"
#include "stratmhd/spectral/ops.hpp"
#include "stratmhd/spectral/transform.hpp"

namespace stratmhd::sim {

using spectral::Axis;
using spectral::GridField;
using spectral::Parity;
using spectral::Spectrum;
using Arr = Eigen::ArrayXXd;

namespace {

Arr on_grid(const Spectrum& s) { return spectral::inverse(s).values; }

// Multiplies every row of a grid array by a y-profile.
Arr times_profile(const Arr& a, const Eigen::ArrayXd& prof) {
  return a.rowwise() * prof.transpose();
}

struct Samples {
  Arr u1, u2, u1x, u1y, u2x, u2y, rx, ry, rxx, rxy, ryy;
};

Samples sample_fields(const Fields& s) {
  Samples g;
  g.u1 = on_grid(s.u1);
  g.u2 = on_grid(s.u2);
  g.u1x = on_grid(spectral::differentiate(s.u1, Axis::X));
  g.u1y = on_grid(spectral::differentiate(s.u1, Axis::Y));
  g.u2x = on_grid(spectral::differentiate(s.u2, Axis::X));
  g.u2y = on_grid(spectral::differentiate(s.u2, Axis::Y));
  const Spectrum rx = spectral::differentiate(s.rho, Axis::X);
  const Spectrum ry = spectral::differentiate(s.rho, Axis::Y);
  g.rx = on_grid(rx);
  g.ry = on_grid(ry);
  g.rxx = on_grid(spectral::differentiate(rx, Axis::X));
  g.rxy = on_grid(spectral::differentiate(rx, Axis::Y));
  g.ryy = on_grid(spectral::differentiate(ry, Axis::Y));
  return g;
}

void require_finite(const Fields& f, const char* what) {
  if (!f.u1.coeffs.allFinite() || !f.u2.coeffs.allFinite() || !f.rho.coeffs.allFinite()) {
    throw NumericalAbort(std::string("non-finite values in ") + what);
  }
}

Spectrum to_spectrum(const spectral::Grid& g, Parity p, Arr values) {
  if (!values.allFinite()) throw NumericalAbort("non-finite nonlinear product");
  return spectral::forward(GridField(g, p, std::move(values)));
}

}  // namespace

double smallness_measure(const Fields& s) {
  return spectral::sobolev_norm(spectral::differentiate(s.rho, Axis::X), 2);
}

Fields linear_rhs(const Fields& s, const Params& p) {
  Fields d = Fields::zeros(s.grid());
  d.u1 = -p.kappa * s.u1 - p.c0 * spectral::differentiate(s.rho, Axis::Y, 2);
  d.u2 = -p.kappa * s.u2 + p.c0 * spectral::partial(s.rho, 1, 1);
  d.rho = -p.c0 * s.u1;
  return project_constraints(std::move(d));
}

RhsResult rhs(const Fields& s, double t, const background::BackgroundModal& bg, const Params& p,
              const RhsOptions& opt) {
  return rhs(s, t, background::eval_background(bg, t), p, opt);
}

RhsResult rhs(const Fields& s, double t, const background::Profiles& bg, const Params& p,
              const RhsOptions& opt) {
  require_finite(s, "state");
  const spectral::Grid& grid = s.grid();
  const int ny = grid.ny;
  const Eigen::ArrayXd phy = bg.dphi.sample(ny);
  const Eigen::ArrayXd phyy = bg.d2phi.sample(ny);
  const Eigen::ArrayXd psi = bg.psi.sample(ny);
  const Eigen::ArrayXd psiy = bg.dpsi.sample(ny);

  const Samples g = sample_fields(s);

  Arr n_rho = -times_profile(g.u2, phy) - g.u1 * g.rx - g.u2 * g.ry - times_profile(g.rx, psi);
  Arr n_u1 = -(g.u1 * g.u1x + g.u2 * g.u1y) - times_profile(g.u2, psiy) -
             times_profile(g.u1x, psi) + (g.ry * g.rxy - g.rx * g.ryy) -
             times_profile(g.rx, phyy) + times_profile(g.rxy, phy);
  Arr n_u2 = -(g.u1 * g.u2x + g.u2 * g.u2y) - times_profile(g.u2x, psi) +
             (-g.ry * g.rxx + g.rx * g.rxy) - times_profile(g.rxx, phy);

  RhsResult out;
  Fields& d = out.dt;
  d = linear_rhs(s, p);
  Fields nl(to_spectrum(grid, Parity::EvenY, std::move(n_u1)),
            to_spectrum(grid, Parity::OddY, std::move(n_u2)),
            to_spectrum(grid, Parity::EvenY, std::move(n_rho)));
  if (opt.source) nl += opt.source(t);
  d += project_constraints(std::move(nl));
  if (opt.dealias) {
    d.u1 = spectral::dealias(std::move(d.u1));
    d.u2 = spectral::dealias(std::move(d.u2));
    d.rho = spectral::dealias(std::move(d.rho));
  }
  require_finite(d, "right-hand side");
  out.smallness = smallness_measure(s);
  out.smallness_ok = out.smallness < kSmallnessBound;
  return out;
}

PressureGap pressure_truncation_gap(const Fields& s, const background::Profiles& bg,
                                    const Params& p) {
  const spectral::Grid& grid = s.grid();
  const int ny = grid.ny;
  const Eigen::ArrayXd phy = bg.dphi.sample(ny);
  const Eigen::ArrayXd phyy = bg.d2phi.sample(ny);
  const Eigen::ArrayXd psi = bg.psi.sample(ny);
  const Eigen::ArrayXd psiy = bg.dpsi.sample(ny);
  const Samples g = sample_fields(s);

  Arr k1 = -(g.u1 * g.u1x + g.u2 * g.u1y) - times_profile(g.u2, psiy) -
           times_profile(g.u1x, psi) + (g.ry * g.rxy - g.rx * g.ryy);
  Arr k2 = -(g.u1 * g.u2x + g.u2 * g.u2y) - times_profile(g.u2x, psi) +
           (-g.ry * g.rxx + g.rx * g.rxy);
  Arr o1 = -times_profile(g.rx, phyy) + times_profile(g.rxy, phy);
  Arr o2 = -times_profile(g.rxx, phy);

  Spectrum s_k1 = to_spectrum(grid, Parity::EvenY, k1);
  Spectrum s_k2 = to_spectrum(grid, Parity::OddY, k2);
  Spectrum s_o1 = to_spectrum(grid, Parity::EvenY, o1);
  Spectrum s_o2 = to_spectrum(grid, Parity::OddY, o2);
  s_o1 -= p.c0 * spectral::differentiate(s.rho, Axis::Y, 2);
  s_o2 += p.c0 * spectral::partial(s.rho, 1, 1);

  const Spectrum p_trunc = pressure_solve(s_k1, s_k2);
  const Spectrum p_full = pressure_solve(s_k1 + s_o1, s_k2 + s_o2);
  PressureGap gap;
  gap.pressure_difference = spectral::sobolev_norm(p_full - p_trunc, 0);
  gap.omitted_divergence = spectral::sobolev_norm(
      spectral::differentiate(s_o1, Axis::X) + spectral::differentiate(s_o2, Axis::Y), 0);
  return gap;
}

}  // namespace stratmhd::sim
