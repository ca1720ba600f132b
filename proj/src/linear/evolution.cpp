#include "stratmhd/error.hpp"
#include "stratmhd/linear/linear.hpp"

namespace stratmhd::linear {

ModeState apply(const Eigen::Matrix3d& e, const ModeState& w) {
  return ModeState::from(e.cast<cdouble>() * w.vec());
}

ModeState duhamel_step(const ModeState& w, const std::array<ModeState, 3>& forcing,
                       const ModeMatrix& m, double h) {
  if (!(h > 0.0)) throw InvalidArgument("duhamel_step: h must be positive");
  const Eigen::Matrix3cd full = propagator(m, h).cast<cdouble>();
  const Eigen::Matrix3cd half = propagator(m, 0.5 * h).cast<cdouble>();
  const Eigen::Vector3cd integral =
      (h / 6.0) * (full * forcing[0].vec() + 4.0 * (half * forcing[1].vec()) + forcing[2].vec());
  return ModeState::from(full * w.vec() + integral);
}

double effective_xi(const spectral::Grid& g, int slot) {
  return g.is_nyquist(slot) ? 0.0 : g.xi(slot);
}

ModeState extract_mode(const Fields& f, int slot, int q) {
  const cdouble minus_i(0.0, -1.0);
  return {f.u1.coeffs(slot, q), minus_i * f.u2.coeffs(slot, q), f.rho.coeffs(slot, q)};
}

void insert_mode(Fields& f, int slot, int q, const ModeState& w) {
  const cdouble plus_i(0.0, 1.0);
  f.u1.coeffs(slot, q) = w.w1;
  const int n = f.grid().ymodes();
  f.u2.coeffs(slot, q) = (q == 0 || q == n) ? cdouble(0.0) : plus_i * w.w2;
  f.rho.coeffs(slot, q) = w.w3;
}

Fields evolve_linear(const Fields& init, double kappa, double c0, double t) {
  if (t < 0.0) throw InvalidArgument("evolve_linear requires t >= 0");
  const spectral::Grid& g = init.grid();
  Fields out = Fields::zeros(g);
#pragma omp parallel for schedule(static)
  for (int q = 0; q < g.ny; ++q) {
    for (int slot = 0; slot < g.nx; ++slot) {
      const ModeState w = extract_mode(init, slot, q);
      if (w.w1 == 0.0 && w.w2 == 0.0 && w.w3 == 0.0) continue;
      const ModeMatrix m = mode_matrix(kappa, c0, effective_xi(g, slot), q);
      insert_mode(out, slot, q, apply(propagator(m, t), w));
    }
  }
  return out;
}

}  // namespace stratmhd::linear
