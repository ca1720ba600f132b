#include <cmath>
#include <initializer_list>

#include "stratmhd/diagnostics/diagnostics.hpp"
#include "stratmhd/error.hpp"
#include "stratmhd/spectral/ops.hpp"
#include "stratmhd/spectral/transform.hpp"

namespace stratmhd::diagnostics {

using spectral::Axis;
using spectral::Spectrum;
using Arr = Eigen::ArrayXXd;

namespace {

struct FineGrid {
  spectral::Grid grid;

  Arr operator()(const Spectrum& s) const {
    return spectral::inverse(spectral::pad_to(s, grid)).values;
  }
  Arr operator()(const Spectrum& s, int ax, int ay) const {
    return (*this)(spectral::partial(s, ax, ay));
  }
  double integrate(const Arr& a) const {
    return spectral::integrate(spectral::GridField(grid, spectral::Parity::EvenY, a));
  }
};

struct Accumulator {
  double sum = 0.0;
  double abs_sum = 0.0;
  void add(double term) {
    sum += term;
    abs_sum += std::abs(term);
  }
  CancellationResult result() const { return {std::abs(sum), abs_sum}; }
};

CancellationResult quadratic_c0(const Fields& f, const FineGrid& fg, double c0) {
  const Arr u1 = fg(f.u1), u2 = fg(f.u2);
  Accumulator acc;
  acc.add(-c0 * fg.integrate(u1 * fg(f.rho, 0, 2)));
  acc.add(c0 * fg.integrate(u2 * fg(f.rho, 1, 1)));
  acc.add(-c0 * fg.integrate(fg(f.rho, 0, 1) * fg(f.u1, 0, 1)));
  acc.add(-c0 * fg.integrate(fg(f.rho, 1, 0) * fg(f.u1, 1, 0)));
  return acc.result();
}

CancellationResult commutator(const Fields& f, const FineGrid& fg, int k) {
  const Arr rx = fg(f.rho, 1, 0), ry = fg(f.rho, 0, 1);
  Accumulator acc;
  for (int a = 0; a <= k; ++a) {
    const int b = k - a;
    const Spectrum U1 = spectral::partial(f.u1, a, b);
    const Spectrum U2 = spectral::partial(f.u2, a, b);
    const Spectrum R = spectral::partial(f.rho, a, b);
    const Arr u1 = fg(U1), u2 = fg(U2);
    const Arr Rx = fg(R, 1, 0), Ry = fg(R, 0, 1);
    const Arr Rxx = fg(R, 2, 0), Rxy = fg(R, 1, 1), Ryy = fg(R, 0, 2);
    const Arr U1x = fg(U1, 1, 0), U1y = fg(U1, 0, 1);
    const Arr U2x = fg(U2, 1, 0), U2y = fg(U2, 0, 1);
    acc.add(fg.integrate(u1 * ry * Rxy));
    acc.add(-fg.integrate(u1 * rx * Ryy));
    acc.add(-fg.integrate(u2 * ry * Rxx));
    acc.add(fg.integrate(u2 * rx * Rxy));
    acc.add(-fg.integrate(Ry * U1y * rx));
    acc.add(-fg.integrate(Ry * U2y * ry));
    acc.add(-fg.integrate(Rx * U1x * rx));
    acc.add(-fg.integrate(Rx * U2x * ry));
  }
  return acc.result();
}

CancellationResult shear(const Fields& f, const FineGrid& fg, const Eigen::ArrayXd& phy, int k) {
  Accumulator acc;
  for (int a = 0; a <= k; ++a) {
    const int b = k - a;
    const Spectrum U1 = spectral::partial(f.u1, a, b);
    const Spectrum U2 = spectral::partial(f.u2, a, b);
    const Spectrum R = spectral::partial(f.rho, a, b);
    const Arr w = Arr(fg(U1) * fg(R, 1, 1)).rowwise() * phy.transpose();
    const Arr u2 = fg(U2);
    acc.add(fg.integrate(w));
    acc.add(-fg.integrate(Arr(u2 * fg(R, 2, 0)).rowwise() * phy.transpose()));
    acc.add(-fg.integrate(Arr(fg(R, 0, 1) * fg(U2, 0, 1)).rowwise() * phy.transpose()));
    acc.add(-fg.integrate(Arr(fg(R, 1, 0) * fg(U2, 1, 0)).rowwise() * phy.transpose()));
  }
  return acc.result();
}

}  // namespace

const char* to_string(Identity id) {
  switch (id) {
    case Identity::QuadraticC0: return "quadratic_c0";
    case Identity::Commutator: return "commutator";
    case Identity::BackgroundShear: return "background_shear";
    case Identity::BackgroundShearDt: return "background_shear_dt";
  }
  return "?";
}

CancellationResult cancellation_check(const sim::PerturbationState& s,
                                      const background::BackgroundModal& bg, Identity which,
                                      double c0, int k) {
  if (k < 0) throw InvalidArgument("cancellation_check: negative order");
  const FineGrid fg{s.fields.grid().refined()};
  switch (which) {
    case Identity::QuadraticC0:
      return quadratic_c0(s.fields, fg, c0);
    case Identity::Commutator:
      return commutator(s.fields, fg, k);
    case Identity::BackgroundShear:
    case Identity::BackgroundShearDt: {
      const auto prof = background::eval_background(bg, s.t);
      const Eigen::ArrayXd phy = prof.dphi.sample(fg.grid.ny);
      if (which == Identity::BackgroundShear) return shear(s.fields, fg, phy, k);
      if (!s.cached_rhs) throw InvalidArgument("time-derivative identity needs cached_rhs");
      return shear(*s.cached_rhs, fg, phy, k);
    }
  }
  throw InvalidArgument("unknown identity");
}

}  // namespace stratmhd::diagnostics
