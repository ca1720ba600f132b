#include "stratmhd/sim/stepper.hpp"

#include <algorithm>
#include <cmath>

#include "stratmhd/error.hpp"
#include "stratmhd/spectral/ops.hpp"
#include "stratmhd/spectral/transform.hpp"

namespace stratmhd::sim {

using spectral::Axis;

namespace {

RhsOptions options(const SimConfig& cfg) { return RhsOptions{cfg.dealias, cfg.source}; }

Fields damp(Fields f, double factor) {
  f.u1 *= factor;
  f.u2 *= factor;
  return f;
}

// Right-hand side without the damping term.
Fields undamped(Fields f, const Fields& y, double kappa) {
  f.u1.coeffs += kappa * y.u1.coeffs;
  f.u2.coeffs += kappa * y.u2.coeffs;
  return f;
}

Fields post_process(Fields f, bool dealias) {
  if (dealias) {
    f.u1 = spectral::dealias(std::move(f.u1));
    f.u2 = spectral::dealias(std::move(f.u2));
    f.rho = spectral::dealias(std::move(f.rho));
  }
  return project_constraints(std::move(f));
}

}  // namespace

RhsResult refresh_rhs(PerturbationState& s, const background::BackgroundModal& bg,
                      const SimConfig& cfg) {
  RhsResult r = rhs(s.fields, s.t, bg, cfg.params, options(cfg));
  s.cached_rhs = r.dt;
  return r;
}

double cfl_number(const PerturbationState& s, const background::BackgroundModal& bg,
                  const SimConfig& cfg, double dt) {
  const Fields& f = s.fields;
  const auto prof = background::eval_background(bg, s.t);
  const int ny = f.grid().ny;
  const Eigen::ArrayXd psi = prof.psi.sample(ny);
  const Eigen::ArrayXd phy = prof.dphi.sample(ny);
  const Eigen::ArrayXXd u1 = spectral::inverse(f.u1).values.rowwise() + psi.transpose();
  const Eigen::ArrayXXd u2 = spectral::inverse(f.u2).values;
  const Eigen::ArrayXXd b1 = spectral::inverse(spectral::differentiate(f.rho, Axis::Y)).values
                                 .rowwise() + phy.transpose();
  const Eigen::ArrayXXd b2 =
      -cfg.params.c0 - spectral::inverse(spectral::differentiate(f.rho, Axis::X)).values;
  const double speed = (u1.square() + u2.square()).sqrt().maxCoeff() +
                       (b1.square() + b2.square()).sqrt().maxCoeff();
  const auto& g = f.grid();
  return dt * speed / std::min(g.dx(), g.dy());
}

PerturbationState step_rk4(const PerturbationState& s, const background::BackgroundModal& bg,
                           const SimConfig& cfg, double dt) {
  const double h = dt < 0.0 ? cfg.dt : dt;
  PerturbationState cur = s;
  if (!cur.cached_rhs) refresh_rhs(cur, bg, cfg);
  if (h == 0.0) return cur;
  const double cfl = cfl_number(cur, bg, cfg, h);
  if (!(cfl < 1.0)) {
    throw NumericalAbort("CFL guard violated at t=" + std::to_string(cur.t) +
                         " (number " + std::to_string(cfl) + ")");
  }

  const Params& p = cfg.params;
  const RhsOptions opt = options(cfg);
  const double t = cur.t;
  const Fields& y = cur.fields;
  auto F = [&](const Fields& z, double tz) { return rhs(z, tz, bg, p, opt).dt; };

  Fields next;
  if (!cfg.integrating_factor) {
    const Fields& k1 = *cur.cached_rhs;
    const Fields k2 = F(Fields(y).axpy(0.5 * h, k1), t + 0.5 * h);
    const Fields k3 = F(Fields(y).axpy(0.5 * h, k2), t + 0.5 * h);
    const Fields k4 = F(Fields(y).axpy(h, k3), t + h);
    next = y;
    next.axpy(h / 6.0, k1).axpy(h / 3.0, k2).axpy(h / 3.0, k3).axpy(h / 6.0, k4);
  } else {
    const double kappa = p.kappa;
    const double e_half = std::exp(-0.5 * kappa * h);
    const double e_full = e_half * e_half;
    auto N = [&](const Fields& z, double tz) { return undamped(F(z, tz), z, kappa); };
    const Fields k1 = undamped(*cur.cached_rhs, y, kappa);
    const Fields y_half = damp(y, e_half);
    const Fields k2 = N(damp(Fields(y).axpy(0.5 * h, k1), e_half), t + 0.5 * h);
    const Fields k3 = N(Fields(y_half).axpy(0.5 * h, k2), t + 0.5 * h);
    const Fields k4 = N(damp(y, e_full).axpy(h, damp(k3, e_half)), t + h);
    next = damp(y, e_full);
    next.axpy(h / 6.0, damp(k1, e_full))
        .axpy(h / 3.0, damp(k2, e_half))
        .axpy(h / 3.0, damp(k3, e_half))
        .axpy(h / 6.0, k4);
  }

  PerturbationState out;
  out.fields = post_process(std::move(next), cfg.dealias);
  out.t = t + h;
  refresh_rhs(out, bg, cfg);
  return out;
}

}  // namespace stratmhd::sim
