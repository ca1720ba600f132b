#include "stratmhd/cli/selftest.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "stratmhd/background/background.hpp"
#include "stratmhd/linear/linear.hpp"
#include "stratmhd/oracle/oracle.hpp"
#include "stratmhd/sim/initial.hpp"
#include "stratmhd/spectral/ops.hpp"
#include "stratmhd/spectral/transform.hpp"

namespace stratmhd::cli {

namespace {

using std::numbers::pi;

struct Check {
  const char* name;
  double error;
  double tolerance;
};

Check background_vs_rk4() {
  sim::Rng rng(11);
  double worst = 0.0;
  for (int trial = 0; trial < 12; ++trial) {
    const double kappa = rng.uniform(0.5, 3.0);
    // Mode 1 sits in each regime in turn: overdamped, critical, underdamped.
    const double c0 = kappa / (2.0 * pi) * std::array{0.5, 1.0, 1.6}[trial % 3];
    Eigen::VectorXd phi0 = Eigen::VectorXd::Zero(4), psi0 = Eigen::VectorXd::Zero(4);
    for (int m = 1; m < 4; ++m) {
      phi0[m] = rng.uniform(-1.0, 1.0);
      psi0[m] = rng.uniform(-1.0, 1.0);
    }
    const auto bg = background::init_background(phi0, psi0, kappa, c0);
    const double t1 = rng.uniform(0.5, 5.0);
    for (int m = 1; m < 4; ++m) {
      const double w2 = std::pow(c0 * m * pi, 2);
      oracle::OdeProblem ode;
      ode.dimension = 2;
      ode.rhs = [&](double, const Eigen::VectorXd& y) {
        Eigen::VectorXd d(2);
        d << y[1], -kappa * y[1] - w2 * y[0];
        return d;
      };
      ode.y0 = Eigen::Vector2d(phi0[m], -c0 * psi0[m]);
      ode.t1 = t1;
      const Eigen::VectorXd ref = oracle::rk4_reference(ode, 1e-3);
      const auto v = background::eval_mode(bg, m, t1);
      const double scale = std::max(1e-12, std::abs(ref[0]) + std::abs(ref[1]));
      worst = std::max(worst, (std::abs(v.phi - ref[0]) + std::abs(v.dphi_dt - ref[1])) / scale);
    }
  }
  return {"background modes vs RK4", worst, 1e-8};
}

Check propagator_vs_expm() {
  sim::Rng rng(12);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const double kappa = rng.uniform(0.1, 4.0);
    const int q = trial % 5;
    const double c0 = trial % 7 == 0 && q > 0 ? kappa / (2.0 * q * pi) : rng.uniform(-1.0, 1.0);
    const double xi = rng.uniform(-8.0, 8.0);
    const double t = rng.uniform(0.0, 10.0);
    const auto m = linear::mode_matrix(kappa, c0, xi, q);
    const Eigen::Matrix3d e = linear::propagator(m, t);
    const Eigen::MatrixXd r = oracle::expm_reference(m.a, t);
    const double norm = std::max(1.0, r.cwiseAbs().maxCoeff());
    worst = std::max(worst, (e - r).cwiseAbs().maxCoeff() / norm);
  }
  return {"mode propagator vs Pade expm", worst, 1e-10};
}

Check transform_roundtrip() {
  spectral::Grid g;
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (auto p : {spectral::Parity::EvenY, spectral::Parity::OddY}) {
    auto f = spectral::GridField::sample(g, p, [&](double, double) { return u(gen); });
    if (p == spectral::Parity::OddY) {
      f.values.col(0).setZero();
      f.values.col(g.ny - 1).setZero();
    }
    const auto back = spectral::inverse(spectral::forward(f));
    worst = std::max(worst, (back.values - f.values).abs().maxCoeff());
  }
  return {"transform roundtrip", worst, 1e-12};
}

Check norm_vs_quadrature() {
  spectral::Grid g{2.0 * pi, 128, 129};
  const auto f = spectral::GridField::sample(g, spectral::Parity::EvenY, [](double x, double y) {
    return std::cos(x) * std::cos(pi * y) + 0.5 * std::sin(2.0 * x) * std::cos(2.0 * pi * y);
  });
  const double exact = spectral::sobolev_norm(spectral::forward(f), 2);
  const double quad = oracle::quadrature_norm(f, 2);
  return {"H^2 norm vs finite-difference quadrature", std::abs(exact - quad) / quad, 1e-4};
}

Check rk4_order() {
  oracle::OdeProblem ode;
  ode.dimension = 1;
  ode.rhs = [](double t, const Eigen::VectorXd& y) {
    Eigen::VectorXd d(1);
    d << y[0] * std::cos(t);
    return d;
  };
  ode.y0 = Eigen::VectorXd::Constant(1, 1.0);
  ode.t1 = 2.0;
  auto exact = [](double t) { return std::exp(std::sin(t)); };
  const double e1 = std::abs(oracle::rk4_reference(ode, 0.1)[0] - exact(2.0));
  const double e2 = std::abs(oracle::rk4_reference(ode, 0.05)[0] - exact(2.0));
  return {"RK4 observed order - 4", std::abs(std::log2(e1 / e2) - 4.0), 0.2};
}

}  // namespace

int selftest(std::ostream& out) {
  int failures = 0;
  for (const Check& c : {background_vs_rk4(), propagator_vs_expm(), transform_roundtrip(),
                         norm_vs_quadrature(), rk4_order()}) {
    const bool ok = c.error <= c.tolerance;
    failures += ok ? 0 : 1;
    out << (ok ? "PASS " : "FAIL ") << c.name << ": " << c.error << " (tol " << c.tolerance
        << ")\n";
  }
  return failures;
}

}  // namespace stratmhd::cli
