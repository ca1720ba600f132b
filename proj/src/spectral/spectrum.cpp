#include "stratmhd/spectral/spectrum.hpp"

#include <string>

#include "stratmhd/error.hpp"

namespace stratmhd::spectral {

GridField::GridField(const Grid& g, Parity p)
    : grid(g), parity(p), values(Eigen::ArrayXXd::Zero(g.nx, g.ny)) {}

GridField::GridField(const Grid& g, Parity p, Eigen::ArrayXXd v)
    : grid(g), parity(p), values(std::move(v)) {
  if (values.rows() != g.nx || values.cols() != g.ny) {
    throw InvalidArgument("grid field shape does not match grid");
  }
}

Spectrum::Spectrum(const Grid& g, Parity p)
    : grid(g), parity(p), coeffs(Eigen::ArrayXXcd::Zero(g.nx, g.ny)) {}

void Spectrum::set_mode(int j, int q, cdouble c) {
  at(j, q) = c;
  if (j != 0 && 2 * j != -grid.nx) at(-j, q) = std::conj(c);
}

void Spectrum::symmetrize() {
  const int nx = grid.nx;
  for (int q = 0; q < grid.ny; ++q) {
    coeffs(0, q) = coeffs(0, q).real();
    coeffs(nx / 2, q) = coeffs(nx / 2, q).real();
    for (int s = 1; s < nx / 2; ++s) {
      const cdouble avg = 0.5 * (coeffs(s, q) + std::conj(coeffs(nx - s, q)));
      coeffs(s, q) = avg;
      coeffs(nx - s, q) = std::conj(avg);
    }
  }
  if (parity == Parity::OddY) {
    coeffs.col(0).setZero();
    coeffs.col(grid.ny - 1).setZero();
  }
}

void require_compatible(const Spectrum& a, const Spectrum& b) {
  if (!(a.grid == b.grid)) throw InvalidArgument("spectra live on different grids");
  if (a.parity != b.parity) {
    throw InvalidArgument(std::string("parity mismatch: ") + to_string(a.parity) + " vs " +
                          to_string(b.parity));
  }
}

Spectrum& Spectrum::operator+=(const Spectrum& o) {
  require_compatible(*this, o);
  coeffs += o.coeffs;
  return *this;
}

Spectrum& Spectrum::operator-=(const Spectrum& o) {
  require_compatible(*this, o);
  coeffs -= o.coeffs;
  return *this;
}

Spectrum& Spectrum::operator*=(double a) {
  coeffs *= a;
  return *this;
}

Spectrum operator+(Spectrum a, const Spectrum& b) { return a += b; }
Spectrum operator-(Spectrum a, const Spectrum& b) { return a -= b; }
Spectrum operator*(double a, Spectrum s) { return s *= a; }
Spectrum operator-(Spectrum s) { return s *= -1.0; }

}  // namespace stratmhd::spectral
