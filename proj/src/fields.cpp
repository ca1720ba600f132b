#include "stratmhd/fields.hpp"

#include <algorithm>

namespace stratmhd {

using spectral::Parity;
using spectral::Spectrum;

Fields Fields::zeros(const spectral::Grid& g) {
  return Fields(Spectrum(g, Parity::EvenY), Spectrum(g, Parity::OddY), Spectrum(g, Parity::EvenY));
}

Fields& Fields::operator+=(const Fields& o) {
  u1 += o.u1;
  u2 += o.u2;
  rho += o.rho;
  return *this;
}

Fields& Fields::operator-=(const Fields& o) {
  u1 -= o.u1;
  u2 -= o.u2;
  rho -= o.rho;
  return *this;
}

Fields& Fields::operator*=(double a) {
  u1 *= a;
  u2 *= a;
  rho *= a;
  return *this;
}

Fields& Fields::axpy(double a, const Fields& o) {
  spectral::require_compatible(u1, o.u1);
  spectral::require_compatible(u2, o.u2);
  spectral::require_compatible(rho, o.rho);
  u1.coeffs += a * o.u1.coeffs;
  u2.coeffs += a * o.u2.coeffs;
  rho.coeffs += a * o.rho.coeffs;
  return *this;
}

double Fields::max_abs() const {
  return std::max({u1.max_abs(), u2.max_abs(), rho.max_abs()});
}

Fields operator+(Fields a, const Fields& b) { return a += b; }
Fields operator-(Fields a, const Fields& b) { return a -= b; }
Fields operator*(double a, Fields f) { return f *= a; }

}  // namespace stratmhd
