#pragma once

#include <numbers>

namespace stratmhd::spectral {

/// Tensor grid on [0, lx) x [0, 1]: nx periodic points in x, ny closed
/// collocation points in y (y_m = m/(ny-1)). The highest y-mode is ny-1.
struct Grid {
  double lx = 2.0 * std::numbers::pi;
  int nx = 64;
  int ny = 33;

  int ymodes() const { return ny - 1; }
  double dx() const { return lx / nx; }
  double dy() const { return 1.0 / (ny - 1); }
  double x(int i) const { return i * dx(); }
  double y(int m) const { return static_cast<double>(m) / (ny - 1); }

  /// Signed Fourier index j of storage slot s (FFT ordering).
  int wavenumber(int s) const { return s < nx / 2 ? s : s - nx; }
  int slot(int j) const { return j >= 0 ? j : j + nx; }
  bool is_nyquist(int s) const { return s == nx / 2; }
  double xi(int s) const { return 2.0 * std::numbers::pi * wavenumber(s) / lx; }
  static double kq(int q) { return q * std::numbers::pi; }

  /// Same domain with twice the resolution in each direction.
  Grid refined() const { return Grid{lx, 2 * nx, 2 * (ny - 1) + 1}; }

  void validate() const;

  bool operator==(const Grid&) const = default;
};

enum class Parity { EvenY, OddY };

inline Parity flip(Parity p) { return p == Parity::EvenY ? Parity::OddY : Parity::EvenY; }

/// Parity of a pointwise product.
inline Parity product_parity(Parity a, Parity b) {
  return a == b ? Parity::EvenY : Parity::OddY;
}

const char* to_string(Parity p);

}  // namespace stratmhd::spectral
