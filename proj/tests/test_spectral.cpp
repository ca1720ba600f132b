#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "stratmhd/error.hpp"
#include "stratmhd/spectral/ops.hpp"
#include "stratmhd/spectral/transform.hpp"

namespace stratmhd::spectral {
namespace {

using std::numbers::pi;

Spectrum random_spectrum(const Grid& g, Parity p, unsigned seed, bool band_limited = true) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Spectrum s(g, p);
  for (int j = 0; j <= g.nx / 2; ++j) {
    for (int q = 0; q < g.ny; ++q) {
      if (band_limited && is_dealiased_mode(g, g.slot(j), q)) continue;
      s.set_mode(j, q, {u(gen), j == 0 || j == g.nx / 2 ? 0.0 : u(gen)});
    }
  }
  s.symmetrize();
  return s;
}

TEST(Forward, SingleCosineMode) {
  Grid g;
  auto f = GridField::sample(g, Parity::EvenY, [](double, double y) { return std::cos(pi * y); });
  Spectrum s = forward(f);
  EXPECT_NEAR(s.at(0, 1).real(), 1.0, 1e-14);
  s.at(0, 1) = 0.0;
  EXPECT_LT(s.max_abs(), 1e-14);
}

TEST(Forward, ZeroField) {
  Grid g{2 * pi, 16, 9};
  EXPECT_EQ(forward(GridField(g, Parity::OddY)).max_abs(), 0.0);
}

TEST(Forward, SineTimesCosineHasTwoEntries) {
  Grid g;
  auto f = GridField::sample(g, Parity::OddY, [&](double x, double y) {
    return std::sin(2 * pi * y) * std::cos(2 * pi * x / g.lx);
  });
  Spectrum s = forward(f);
  EXPECT_NEAR(s.at(1, 2).real(), 0.5, 1e-14);
  EXPECT_NEAR(s.at(-1, 2).real(), 0.5, 1e-14);
  int nonzero = 0;
  for (Eigen::Index i = 0; i < s.coeffs.size(); ++i) nonzero += std::abs(s.coeffs(i)) > 1e-13;
  EXPECT_EQ(nonzero, 2);
}

TEST(Forward, RejectsNonFinite) {
  Grid g{2 * pi, 8, 5};
  GridField f(g, Parity::EvenY);
  f.values(1, 1) = std::nan("");
  EXPECT_THROW(forward(f), InvalidArgument);
}

TEST(Inverse, ZeroSpectrum) {
  Grid g{2 * pi, 16, 9};
  EXPECT_EQ(inverse(Spectrum(g, Parity::EvenY)).max_abs(), 0.0);
}

TEST(Inverse, BasisFunction) {
  Grid g;
  Spectrum s(g, Parity::EvenY);
  s.at(0, 1) = 1.0;
  GridField f = inverse(s);
  for (int m = 0; m < g.ny; ++m) {
    for (int i = 0; i < g.nx; ++i) EXPECT_NEAR(f.values(i, m), std::cos(pi * g.y(m)), 1e-14);
  }
}

TEST(Inverse, RoundTripBothParities) {
  for (Parity p : {Parity::EvenY, Parity::OddY}) {
    for (Grid g : {Grid{}, Grid{3.0, 32, 17}, Grid{2 * pi, 128, 65}}) {
      const Spectrum s = random_spectrum(g, p, 7, false);
      const Spectrum back = forward(inverse(s));
      EXPECT_LT((back - s).max_abs(), 1e-12) << to_string(p) << " " << g.nx;
    }
  }
}

TEST(Differentiate, CosineInY) {
  Grid g;
  Spectrum s(g, Parity::EvenY);
  s.at(0, 1) = 1.0;
  Spectrum d = differentiate(s, Axis::Y);
  EXPECT_EQ(d.parity, Parity::OddY);
  GridField f = inverse(d);
  for (int m = 0; m < g.ny; ++m) EXPECT_NEAR(f.values(3, m), -pi * std::sin(pi * g.y(m)), 1e-13);
}

TEST(Differentiate, XOfMeanIsZero) {
  Grid g;
  Spectrum s(g, Parity::EvenY);
  for (int q = 0; q < g.ny; ++q) s.at(0, q) = 1.0 / (1 + q);
  EXPECT_EQ(differentiate(s, Axis::X).max_abs(), 0.0);
}

TEST(Differentiate, SecondYDerivativeKeepsParity) {
  Grid g;
  Spectrum s(g, Parity::OddY);
  s.at(0, 2) = 1.0;
  Spectrum d = differentiate(s, Axis::Y, 2);
  EXPECT_EQ(d.parity, Parity::OddY);
  EXPECT_NEAR(d.at(0, 2).real(), -4 * pi * pi, 1e-12);
}

TEST(Differentiate, MatchesAnalyticMixedPartial) {
  Grid g{4.0, 32, 33};
  auto f = GridField::sample(g, Parity::EvenY, [&](double x, double y) {
    return std::sin(2 * pi * x / g.lx) * std::cos(3 * pi * y);
  });
  GridField d = inverse(partial(forward(f), 1, 1));
  const double a = 2 * pi / g.lx;
  double err = 0.0;
  for (int m = 0; m < g.ny; ++m) {
    for (int i = 0; i < g.nx; ++i) {
      const double want = -3 * pi * a * std::cos(a * g.x(i)) * std::sin(3 * pi * g.y(m));
      err = std::max(err, std::abs(d.values(i, m) - want));
    }
  }
  EXPECT_LT(err, 1e-12);
}

TEST(SobolevNorm, ZeroSpectrum) {
  Grid g;
  for (int k = 0; k < 5; ++k) EXPECT_EQ(sobolev_norm(Spectrum(g, Parity::EvenY), k), 0.0);
}

TEST(SobolevNorm, CosineL2AndH1) {
  Grid g;
  Spectrum s(g, Parity::EvenY);
  s.at(0, 1) = 1.0;
  EXPECT_NEAR(sobolev_norm(s, 0), 1.7724538509055159, 1e-13);
  EXPECT_NEAR(sobolev_norm(s, 1), 5.8436178292124481, 1e-12);
}

TEST(SobolevNorm, AgreesWithGridQuadrature) {
  for (Parity p : {Parity::EvenY, Parity::OddY}) {
    Grid g{2.5, 32, 17};
    const Spectrum s = random_spectrum(g, p, 3);
    GridField f = inverse(s);
    GridField sq(g, Parity::EvenY, f.values.square());
    EXPECT_NEAR(sobolev_norm_sq(s, 0), integrate(sq), 1e-12 * integrate(sq));
  }
}

TEST(SobolevNorm, MonotoneInOrder) {
  const Spectrum s = random_spectrum(Grid{}, Parity::OddY, 5);
  for (int k = 0; k < 8; ++k) EXPECT_LE(sobolev_norm(s, k), sobolev_norm(s, k + 1));
}

TEST(SobolevNorm, EqualsSumOfGradientNorms) {
  const Spectrum s = random_spectrum(Grid{}, Parity::EvenY, 9);
  double sum = 0.0;
  for (int j = 0; j <= 3; ++j) sum += gradient_norm_sq(s, j);
  EXPECT_NEAR(sobolev_norm_sq(s, 3), sum, 1e-12 * sum);
}

TEST(Inner, MatchesNormSquared) {
  const Spectrum s = random_spectrum(Grid{}, Parity::EvenY, 13);
  EXPECT_NEAR(inner(s, s), sobolev_norm_sq(s, 0), 1e-12 * inner(s, s));
}

TEST(Dealias, BandLimitedUnchanged) {
  const Spectrum s = random_spectrum(Grid{}, Parity::EvenY, 17);
  EXPECT_EQ((dealias(s) - s).max_abs(), 0.0);
}

TEST(Dealias, HighModeRemoved) {
  Grid g;
  Spectrum s(g, Parity::EvenY);
  s.set_mode(g.nx / 2 - 1, 1, 1.0);
  EXPECT_EQ(dealias(s).max_abs(), 0.0);
  Spectrum t(g, Parity::EvenY);
  t.at(0, g.ny - 1) = 1.0;
  EXPECT_EQ(dealias(t).max_abs(), 0.0);
}

TEST(Dealias, NormNonIncreasing) {
  const Spectrum s = random_spectrum(Grid{}, Parity::OddY, 19, false);
  EXPECT_LE(sobolev_norm(dealias(s), 0), sobolev_norm(s, 0));
}

TEST(Multiply, ParityAlgebraAndValues) {
  Grid g;
  auto a = GridField::sample(g, Parity::OddY, [](double x, double y) {
    return std::sin(pi * y) * std::cos(x);
  });
  auto b = GridField::sample(g, Parity::OddY, [](double, double y) { return std::sin(2 * pi * y); });
  GridField c = multiply(a, b);
  EXPECT_EQ(c.parity, Parity::EvenY);
  EXPECT_NEAR(c.values(5, 7), a.values(5, 7) * b.values(5, 7), 1e-15);
}

TEST(PadTruncate, RoundTripAndValues) {
  Grid g{2 * pi, 32, 17};
  const Spectrum s = random_spectrum(g, Parity::EvenY, 23, false);
  const Grid fine = g.refined();
  const Spectrum padded = pad_to(s, fine);
  EXPECT_LT((truncate_to(padded, g) - s).max_abs(), 1e-15);
  GridField coarse = inverse(s);
  GridField dense = inverse(padded);
  for (int m = 0; m < g.ny; ++m) {
    for (int i = 0; i < g.nx; ++i) {
      EXPECT_NEAR(dense.values(2 * i, 2 * m), coarse.values(i, m), 1e-12);
    }
  }
  const Spectrum smooth = random_spectrum(g, Parity::OddY, 29);
  EXPECT_NEAR(sobolev_norm(pad_to(smooth, fine), 2), sobolev_norm(smooth, 2),
              1e-12 * sobolev_norm(smooth, 2));
}

TEST(Spectral, ExponentialConvergenceOnSmoothData) {
  auto f = [](double x, double y) { return std::exp(std::cos(x)) * std::cos(std::sin(pi * y)); };
  // d/dy of the EvenY function above, checked at the collocation points
  auto fy = [](double x, double y) {
    return -std::exp(std::cos(x)) * std::sin(std::sin(pi * y)) * pi * std::cos(pi * y);
  };
  double prev = 0.0;
  for (int n : {8, 16, 32}) {
    Grid g{2 * pi, n, n + 1};
    GridField d = inverse(differentiate(forward(GridField::sample(g, Parity::EvenY, f)), Axis::Y));
    double err = 0.0;
    for (int m = 0; m < g.ny; ++m) {
      for (int i = 0; i < g.nx; ++i) {
        err = std::max(err, std::abs(d.values(i, m) - fy(g.x(i), g.y(m))));
      }
    }
    if (n == 16) EXPECT_GT(prev / err, 1e3);
    if (n == 32) EXPECT_LT(err, 1e-11);
    prev = err;
  }
}

TEST(Grid, Validation) {
  EXPECT_THROW((Grid{2 * pi, 7, 9}).validate(), InvalidArgument);
  EXPECT_THROW((Grid{-1.0, 8, 9}).validate(), InvalidArgument);
  EXPECT_THROW((Grid{2 * pi, 8, 2}).validate(), InvalidArgument);
  EXPECT_NO_THROW(Grid{}.validate());
}

}  // namespace
}  // namespace stratmhd::spectral
