#pragma once

#include "stratmhd/spectral/spectrum.hpp"

namespace stratmhd {

/// Velocity (u1 EvenY, u2 OddY) and magnetic perturbation rho (EvenY).
struct Fields {
  spectral::Spectrum u1, u2, rho;

  Fields() = default;
  Fields(spectral::Spectrum a, spectral::Spectrum b, spectral::Spectrum c)
      : u1(std::move(a)), u2(std::move(b)), rho(std::move(c)) {}

  static Fields zeros(const spectral::Grid& g);

  const spectral::Grid& grid() const { return u1.grid; }

  Fields& operator+=(const Fields& o);
  Fields& operator-=(const Fields& o);
  Fields& operator*=(double a);
  /// this += a * o
  Fields& axpy(double a, const Fields& o);

  double max_abs() const;
};

Fields operator+(Fields a, const Fields& b);
Fields operator-(Fields a, const Fields& b);
Fields operator*(double a, Fields f);

}  // namespace stratmhd
