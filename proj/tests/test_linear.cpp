#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "stratmhd/error.hpp"
#include "stratmhd/linear/linear.hpp"
#include "stratmhd/oracle/oracle.hpp"
#include "stratmhd/sim/initial.hpp"
#include "stratmhd/spectral/ops.hpp"

namespace stratmhd::linear {
namespace {

using std::numbers::pi;

double max_diff(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Eigen::Matrix3d frozen(std::initializer_list<double> v) {
  Eigen::Matrix3d m;
  auto it = v.begin();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(r, c) = *it++;
  }
  return m;
}

// Complex mode state integrated by the scalar RK4 oracle on (Re, Im) pairs.
Eigen::Vector3cd rk4_forced(const ModeMatrix& m, const Eigen::Vector3cd& w0,
                            const std::function<Eigen::Vector3cd(double)>& q, double h) {
  oracle::OdeProblem ode;
  ode.dimension = 6;
  ode.rhs = [&](double t, const Eigen::VectorXd& y) {
    Eigen::Vector3cd w(cdouble(y[0], y[1]), cdouble(y[2], y[3]), cdouble(y[4], y[5]));
    Eigen::Vector3cd d = m.a.cast<cdouble>() * w + q(t);
    Eigen::VectorXd r(6);
    r << d[0].real(), d[0].imag(), d[1].real(), d[1].imag(), d[2].real(), d[2].imag();
    return r;
  };
  ode.y0.resize(6);
  ode.y0 << w0[0].real(), w0[0].imag(), w0[1].real(), w0[1].imag(), w0[2].real(), w0[2].imag();
  ode.t1 = h;
  const Eigen::VectorXd y = oracle::rk4_reference(ode, h / 2000);
  return {cdouble(y[0], y[1]), cdouble(y[2], y[3]), cdouble(y[4], y[5])};
}

TEST(ModeMatrix, UnitParameters) {
  const auto m = mode_matrix(1.0, 1.0, 0.0, 1);
  const Eigen::Matrix3d want = frozen({-1, 0, pi * pi, 0, -1, 0, -1, 0, 0});
  EXPECT_LT(max_diff(m.a, want), 1e-15);
}

TEST(ModeMatrix, ZeroYMode) {
  const auto m = mode_matrix(1.7, 0.6, 2.5, 0);
  EXPECT_EQ(m.a.col(2).cwiseAbs().maxCoeff(), 0.0);
  Eigen::Vector3d ev = m.a.eigenvalues().real();
  std::sort(ev.data(), ev.data() + 3);
  EXPECT_NEAR(ev[0], -1.7, 1e-14);
  EXPECT_NEAR(ev[1], -1.7, 1e-14);
  EXPECT_NEAR(ev[2], 0.0, 1e-14);
}

TEST(ModeMatrix, CriticalBoundary) {
  const auto m = mode_matrix(2.0, 1.0 / pi, 0.3, 1);
  EXPECT_NEAR(m.delta, 0.0, 1e-14);
  EXPECT_NEAR(m.lambda_plus.real(), -1.0, 1e-7);
  EXPECT_NEAR(m.lambda_minus.real(), -1.0, 1e-7);
}

TEST(Propagator, IdentityAtZero) {
  for (int q : {0, 1, 3}) {
    const auto m = mode_matrix(1.2, 0.4, -2.0, q);
    EXPECT_LT(max_diff(propagator(m, 0.0), Eigen::Matrix3d::Identity()), 1e-15);
  }
}

TEST(Propagator, RejectsNegativeTime) {
  EXPECT_THROW(propagator(mode_matrix(1.0, 1.0, 0.0, 1), -1.0), InvalidArgument);
}

TEST(Propagator, CriticalEntry) {
  const auto m = mode_matrix(2.0, 1.0 / pi, 0.7, 1);
  for (double t : {0.3, 1.0, 2.5}) {
    EXPECT_NEAR(propagator(m, t)(0, 0), (1 - t) * std::exp(-t), 1e-14);
  }
  EXPECT_NEAR(propagator(m, 1.0)(0, 0), 0.0, 1e-15);
}

TEST(Propagator, ZeroYModeClosedForm) {
  const double kappa = 1.4, c0 = 0.35, t = 2.2;
  const Eigen::Matrix3d e = propagator(mode_matrix(kappa, c0, 3.0, 0), t);
  const double d = std::exp(-kappa * t);
  const Eigen::Matrix3d want = frozen({d, 0, 0, 0, d, 0, (c0 / kappa) * (d - 1), 0, 1});
  EXPECT_LT(max_diff(e, want), 1e-15);
}

TEST(Propagator, ZeroModeHalvesAtLn2) {
  const ModeState w = apply(propagator(mode_matrix(1.0, 0.8, 1.0, 0), std::log(2.0)), {0, 1, 0});
  EXPECT_NEAR(std::abs(w.w1), 0.0, 1e-16);
  EXPECT_NEAR(w.w2.real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(w.w3), 0.0, 1e-16);
}

TEST(Propagator, FrozenReferenceExponentials) {
  struct Case {
    double kappa, c0, xi;
    int q;
    double t;
    Eigen::Matrix3d want;
  };
  const Case cases[] = {
      {1.3, 0.4, 2.0, 1, 1.7,
       frozen({-0.27792779839746462, 0, 1.1757236352445135, 0.24677193363693817,
               0.10970064851551209, -0.74848891303654785, -0.1191257103592463, 0,
               0.10923076027008616})},
      {2.0, 1.0 / pi, 1.5, 1, 0.8,
       frozen({0.089865792823444091, 0, 1.1292868581726201, 0.0534907310675036,
               0.20189651799465536, -0.53919475694066599, -0.11442068114178668, 0,
               0.80879213541099881})},
      {0.7, 0.9, -3.0, 2, 2.5,
       frozen({-0.01454373030445086, 0, 2.6232887606958686, -0.089915065948975734,
               0.17377394345044517, 1.2525281202664786, -0.066448680567336688, 0,
               0.03713857680347768})},
  };
  for (const auto& c : cases) {
    const auto m = mode_matrix(c.kappa, c.c0, c.xi, c.q);
    EXPECT_LT(max_diff(propagator(m, c.t), c.want), 1e-13);
    EXPECT_LT(max_diff(oracle::expm_reference(m.a, c.t), c.want), 1e-12);
  }
}

TEST(Propagator, ZeroStateStaysZero) {
  const ModeState w = apply(propagator(mode_matrix(0.5, 2.0, 1.0, 2), 3.0), {0, 0, 0});
  EXPECT_EQ(std::abs(w.w1) + std::abs(w.w2) + std::abs(w.w3), 0.0);
}

TEST(Propagator, MatchesRk4SingleMode) {
  const auto m = mode_matrix(0.9, 0.25, 1.0, 1);
  const Eigen::Vector3cd w0(cdouble(0.3, -0.1), cdouble(-0.5, 0.2), cdouble(0.7, 0.4));
  const auto ref = rk4_forced(m, w0, [](double) { return Eigen::Vector3cd::Zero().eval(); }, 2.0);
  const Eigen::Vector3cd got = propagator(m, 2.0).cast<cdouble>() * w0;
  EXPECT_LT((got - ref).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Duhamel, ZeroForcingIsPropagator) {
  const auto m = mode_matrix(1.1, 0.3, 2.0, 2);
  const ModeState w{cdouble(0.2, 0.1), cdouble(-0.4, 0), cdouble(0.1, -0.3)};
  const ModeState zero{0, 0, 0};
  const ModeState a = duhamel_step(w, {zero, zero, zero}, m, 0.7);
  const ModeState b = apply(propagator(m, 0.7), w);
  EXPECT_LT((a.vec() - b.vec()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Duhamel, ConstantForcingClosedForm) {
  const auto m = mode_matrix(1.5, 0.45, -1.0, 1);
  const double h = 0.05;
  const ModeState w{cdouble(0.2, 0.1), cdouble(-0.4, 0.3), cdouble(0.1, -0.3)};
  const ModeState q{cdouble(1.0, 0.5), cdouble(-0.2, 0.0), cdouble(0.3, 0.1)};
  const ModeState got = duhamel_step(w, {q, q, q}, m, h);
  const Eigen::Matrix3d e = propagator(m, h);
  const Eigen::Vector3cd closed =
      e.cast<cdouble>() * w.vec() +
      (m.a.inverse() * (e - Eigen::Matrix3d::Identity())).cast<cdouble>() * q.vec();
  EXPECT_LT((got.vec() - closed).cwiseAbs().maxCoeff(), 1e-8);
  const auto ref = rk4_forced(m, w.vec(), [&](double) { return q.vec(); }, h);
  EXPECT_LT((closed - ref).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Duhamel, ExponentialForcingAgainstRk4) {
  const double kappa = 1.2;
  const auto m = mode_matrix(kappa, 0.3, 2.0, 1);
  const Eigen::Vector3cd v(cdouble(0.0), cdouble(1.0), cdouble(0.0));  // eigenvector for -kappa
  auto forcing = [&](double s) { return (std::exp(-kappa * s) * v).eval(); };
  const double h = 0.02;
  const ModeState w{cdouble(0.1), cdouble(0.2), cdouble(-0.1)};
  const ModeState got = duhamel_step(
      w, {ModeState::from(forcing(0)), ModeState::from(forcing(h / 2)), ModeState::from(forcing(h))},
      m, h);
  const auto ref = rk4_forced(m, w.vec(), forcing, h);
  EXPECT_LT((got.vec() - ref).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(SpectralAbscissa, DefaultParameters) {
  EXPECT_NEAR(spectral_abscissa(2.0, 0.5 / pi), 0.1339745962155614, 1e-15);
}

TEST(SpectralAbscissa, UnderdampedFirstMode) { EXPECT_DOUBLE_EQ(spectral_abscissa(1.0, 1.0), 0.5); }

TEST(SpectralAbscissa, LargeDamping) {
  const double c = spectral_abscissa(100.0, 0.5 / pi);
  EXPECT_NEAR(c, 0.0025000625031251951, 1e-15);
  EXPECT_GT(c, 0.0);
  EXPECT_LT(c, 50.0);
  EXPECT_NEAR(c, 0.25 / 100.0, 1e-6);
}

TEST(SpectralAbscissa, AttainedAtFirstMode) {
  const double kappa = 2.0, c0 = 0.5 / pi;
  const double c = spectral_abscissa(kappa, c0);
  for (int q = 1; q < 6; ++q) {
    EXPECT_GE(-mode_matrix(kappa, c0, 0.0, q).lambda_plus.real(), c - 1e-15);
  }
}

TEST(BootstrapRate, MinOfAlphaAndHalfAbscissa) {
  EXPECT_NEAR(bootstrap_rate(2.0, 0.5 / pi), 0.0669872981077807, 1e-15);
}

TEST(EvolveLinear, ModeByModeAgreesWithPropagator) {
  spectral::Grid g{2 * pi, 16, 9};
  const Fields init = sim::random_initial(g, 1.0, 2, 5);
  const double kappa = 2.0, c0 = 0.5 / pi, t = 1.3;
  const Fields out = evolve_linear(init, kappa, c0, t);
  for (int slot = 0; slot < g.nx; ++slot) {
    for (int q = 0; q < g.ny; ++q) {
      const auto m = mode_matrix(kappa, c0, effective_xi(g, slot), q);
      const ModeState want = apply(propagator(m, t), extract_mode(init, slot, q));
      const ModeState got = extract_mode(out, slot, q);
      EXPECT_LT((want.vec() - got.vec()).cwiseAbs().maxCoeff(), 1e-14);
    }
  }
}

TEST(EvolveLinear, ExtractInsertRoundTrip) {
  spectral::Grid g{2 * pi, 16, 9};
  const Fields f = sim::random_initial(g, 1.0, 2, 8);
  Fields h = Fields::zeros(g);
  for (int slot = 0; slot < g.nx; ++slot) {
    for (int q = 0; q < g.ny; ++q) insert_mode(h, slot, q, extract_mode(f, slot, q));
  }
  EXPECT_LT((h - f).max_abs(), 1e-15);
}

TEST(EvolveLinear, DecaysAtAbscissa) {
  spectral::Grid g{2 * pi, 16, 9};
  const Fields init = sim::random_initial(g, 1.0, 7, 3);
  const double c = spectral_abscissa(2.0, 0.5 / pi);
  auto norm = [](const Fields& f) {
    return spectral::sobolev_norm(f.u1, 3) + spectral::sobolev_norm(f.u2, 3) +
           spectral::sobolev_norm(f.rho, 3);
  };
  const double n1 = norm(evolve_linear(init, 2.0, 0.5 / pi, 30.0));
  const double n2 = norm(evolve_linear(init, 2.0, 0.5 / pi, 40.0));
  EXPECT_NEAR(std::log(n1 / n2) / 10.0, c, 1e-3);
}

}  // namespace
}  // namespace stratmhd::linear
