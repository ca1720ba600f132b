#pragma once

#include <complex>

#include <Eigen/Core>

#include "stratmhd/spectral/grid.hpp"

namespace stratmhd::spectral {

using cdouble = std::complex<double>;

/// Real samples on the tensor grid; values(i, m) is f(x_i, y_m).
struct GridField {
  Grid grid;
  Parity parity = Parity::EvenY;
  Eigen::ArrayXXd values;

  GridField() = default;
  GridField(const Grid& g, Parity p);
  GridField(const Grid& g, Parity p, Eigen::ArrayXXd v);

  template <class F>
  static GridField sample(const Grid& g, Parity p, F&& f) {
    GridField out(g, p);
    for (int m = 0; m < g.ny; ++m) {
      for (int i = 0; i < g.nx; ++i) out.values(i, m) = f(g.x(i), g.y(m));
    }
    return out;
  }

  double max_abs() const { return values.abs().maxCoeff(); }
};

/// Coefficients on e^{i xi_j x} times cos(q pi y) (EvenY) or sin(q pi y) (OddY).
/// coeffs(s, q): s is the FFT storage slot of j, q = 0..ny-1.
struct Spectrum {
  Grid grid;
  Parity parity = Parity::EvenY;
  Eigen::ArrayXXcd coeffs;

  Spectrum() = default;
  Spectrum(const Grid& g, Parity p);

  cdouble& at(int j, int q) { return coeffs(grid.slot(j), q); }
  cdouble at(int j, int q) const { return coeffs(grid.slot(j), q); }

  /// Sets coefficient (j, q) and its Hermitian partner (-j, q).
  void set_mode(int j, int q, cdouble c);

  /// Enforces coeffs(-j) = conj(coeffs(j)), a real Nyquist column and, for
  /// OddY, vanishing q = 0 and q = N rows.
  void symmetrize();

  double max_abs() const { return coeffs.abs().maxCoeff(); }

  Spectrum& operator+=(const Spectrum& o);
  Spectrum& operator-=(const Spectrum& o);
  Spectrum& operator*=(double a);
};

Spectrum operator+(Spectrum a, const Spectrum& b);
Spectrum operator-(Spectrum a, const Spectrum& b);
Spectrum operator*(double a, Spectrum s);
Spectrum operator-(Spectrum s);

/// Throws InvalidArgument unless the two spectra share grid and parity.
void require_compatible(const Spectrum& a, const Spectrum& b);

}  // namespace stratmhd::spectral
