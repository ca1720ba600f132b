#include "stratmhd/spectral/ops.hpp"

#include <cmath>
#include <cstdlib>

#include "stratmhd/error.hpp"

namespace stratmhd::spectral {
namespace {

// sum_{a+b<=k} X^a Y^b (or only a+b == k when exact).
double multi_index_weight(double X, double Y, int k, bool exact) {
  double total = 0.0;
  for (int n = exact ? k : 0; n <= k; ++n) {
    double term = 0.0;
    double xa = 1.0;
    for (int a = 0; a <= n; ++a) {
      term += xa * std::pow(Y, n - a);
      xa *= X;
    }
    total += term;
  }
  return total;
}

double weighted_sum(const Spectrum& s, int k, bool exact) {
  if (k < 0) throw InvalidArgument("Sobolev order must be non-negative");
  const Grid& g = s.grid;
  double total = 0.0;
  for (int q = 0; q < g.ny; ++q) {
    const double w = parseval_weight(g, s.parity, q);
    const double Y = Grid::kq(q) * Grid::kq(q);
    for (int slot = 0; slot < g.nx; ++slot) {
      const double a2 = std::norm(s.coeffs(slot, q));
      if (a2 == 0.0) continue;
      const double X = g.xi(slot) * g.xi(slot);
      total += w * a2 * multi_index_weight(X, Y, k, exact);
    }
  }
  return g.lx * total;
}

}  // namespace

Spectrum differentiate(const Spectrum& s, Axis axis, int order) {
  if (order < 1) throw InvalidArgument("derivative order must be >= 1");
  const Grid& g = s.grid;
  if (axis == Axis::X) {
    Spectrum out = s;
    const cdouble i1(0.0, 1.0);
    for (int slot = 0; slot < g.nx; ++slot) {
      cdouble factor = std::pow(i1 * g.xi(slot), order);
      if (g.is_nyquist(slot) && order % 2 == 1) factor = 0.0;
      out.coeffs.row(slot) *= factor;
    }
    return out;
  }
  Spectrum cur = s;
  const int n = g.ymodes();
  for (int r = 0; r < order; ++r) {
    Spectrum next(g, flip(cur.parity));
    if (cur.parity == Parity::EvenY) {
      for (int q = 1; q < n; ++q) next.coeffs.col(q) = -Grid::kq(q) * cur.coeffs.col(q);
    } else {
      for (int q = 1; q < n; ++q) next.coeffs.col(q) = Grid::kq(q) * cur.coeffs.col(q);
    }
    cur = std::move(next);
  }
  return cur;
}

Spectrum partial(const Spectrum& s, int ax, int ay) {
  Spectrum out = s;
  if (ax > 0) out = differentiate(out, Axis::X, ax);
  if (ay > 0) out = differentiate(out, Axis::Y, ay);
  return out;
}

double parseval_weight(const Grid& g, Parity p, int q) {
  if (p == Parity::EvenY && (q == 0 || q == g.ymodes())) return 1.0;
  if (p == Parity::OddY && (q == 0 || q == g.ymodes())) return 0.0;
  return 0.5;
}

double sobolev_norm_sq(const Spectrum& s, int k) { return weighted_sum(s, k, false); }

double sobolev_norm(const Spectrum& s, int k) { return std::sqrt(sobolev_norm_sq(s, k)); }

double gradient_norm_sq(const Spectrum& s, int k) { return weighted_sum(s, k, true); }

double inner(const Spectrum& a, const Spectrum& b) {
  require_compatible(a, b);
  const Grid& g = a.grid;
  double total = 0.0;
  for (int q = 0; q < g.ny; ++q) {
    const double w = parseval_weight(g, a.parity, q);
    for (int slot = 0; slot < g.nx; ++slot) {
      total += w * (a.coeffs(slot, q) * std::conj(b.coeffs(slot, q))).real();
    }
  }
  return g.lx * total;
}

double integrate(const GridField& f) {
  const Grid& g = f.grid;
  double total = 0.0;
  for (int m = 0; m < g.ny; ++m) {
    const double w = (m == 0 || m == g.ny - 1) ? 0.5 : 1.0;
    total += w * f.values.col(m).sum();
  }
  return total * g.dx() * g.dy();
}

bool is_dealiased_mode(const Grid& g, int slot, int q) {
  return 3 * std::abs(g.wavenumber(slot)) > g.nx || 3 * q > 2 * g.ymodes();
}

Spectrum dealias(Spectrum s) {
  const Grid& g = s.grid;
  for (int q = 0; q < g.ny; ++q) {
    for (int slot = 0; slot < g.nx; ++slot) {
      if (is_dealiased_mode(g, slot, q)) s.coeffs(slot, q) = 0.0;
    }
  }
  return s;
}

GridField multiply(const GridField& a, const GridField& b) {
  if (!(a.grid == b.grid)) throw InvalidArgument("multiply: grid mismatch");
  return GridField(a.grid, product_parity(a.parity, b.parity), a.values * b.values);
}

}  // namespace stratmhd::spectral
