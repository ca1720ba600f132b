#include <cmath>

#include "stratmhd/error.hpp"
#include "stratmhd/oracle/oracle.hpp"
#include "stratmhd/spectral/ops.hpp"

namespace stratmhd::oracle {

using spectral::GridField;
using spectral::Parity;

GridField fd_derivative(const GridField& f, bool along_y) {
  const auto& g = f.grid;
  if (g.ny < 9) throw InvalidArgument("quadrature oracle needs n_y >= 9");
  GridField out(g, along_y ? spectral::flip(f.parity) : f.parity);
  const auto& v = f.values;
  if (!along_y) {
    const double h = g.dx();
    for (int m = 0; m < g.ny; ++m) {
      for (int i = 0; i < g.nx; ++i) {
        auto at = [&](int d) { return v((i + d + 2 * g.nx) % g.nx, m); };
        out.values(i, m) = (at(-2) - 8.0 * at(-1) + 8.0 * at(1) - at(2)) / (12.0 * h);
      }
    }
    return out;
  }
  const double h = g.dy();
  const int last = g.ny - 1;
  const double sign = f.parity == Parity::EvenY ? 1.0 : -1.0;
  for (int i = 0; i < g.nx; ++i) {
    auto at = [&](int m) {
      if (m < 0) return sign * v(i, -m);
      if (m > last) return sign * v(i, 2 * last - m);
      return v(i, m);
    };
    for (int m = 0; m <= last; ++m) {
      out.values(i, m) = (at(m - 2) - 8.0 * at(m - 1) + 8.0 * at(m + 1) - at(m + 2)) / (12.0 * h);
    }
  }
  return out;
}

double quadrature_norm(const GridField& f, int k) {
  if (k < 0) throw InvalidArgument("quadrature_norm: negative order");
  if (f.grid.ny < 9) throw InvalidArgument("quadrature oracle needs n_y >= 9");
  double total = 0.0;
  GridField dx_pow = f;
  for (int a = 0; a <= k; ++a) {
    GridField cur = dx_pow;
    for (int b = 0; a + b <= k; ++b) {
      total += spectral::integrate(spectral::multiply(cur, cur));
      if (a + b < k) cur = fd_derivative(cur, true);
    }
    if (a < k) dx_pow = fd_derivative(dx_pow, false);
  }
  return std::sqrt(total);
}

}  // namespace stratmhd::oracle
