#pragma once

#include "stratmhd/spectral/spectrum.hpp"

namespace stratmhd::spectral {

enum class Axis { X, Y };

/// Spectral derivative. Each y-derivative flips the parity.
Spectrum differentiate(const Spectrum& s, Axis axis, int order = 1);

/// d^a/dx^a d^b/dy^b.
Spectrum partial(const Spectrum& s, int ax, int ay);

/// Parseval weight of basis function (slot, q) in the L2 inner product on
/// [0, lx) x [0, 1], consistent with trapezoid quadrature on the grid.
double parseval_weight(const Grid& g, Parity p, int q);

/// sum over |a| <= k of ||d^a f||^2, i.e. the squared H^k norm.
double sobolev_norm_sq(const Spectrum& s, int k);
double sobolev_norm(const Spectrum& s, int k);

/// sum over |a| = k of ||d^a f||^2 (no multinomial factors).
double gradient_norm_sq(const Spectrum& s, int k);

/// L2 inner product Re int f conj(g); both arguments share grid and parity.
double inner(const Spectrum& a, const Spectrum& b);

/// Trapezoid quadrature of a grid field over the domain.
double integrate(const GridField& f);

/// Zeroes coefficients with 3|j| > nx or 3q > 2(ny-1).
Spectrum dealias(Spectrum s);
/// True when dealias() removes mode (slot, q).
bool is_dealiased_mode(const Grid& g, int slot, int q);

/// Pointwise product on the grid; parity follows the parity algebra.
GridField multiply(const GridField& a, const GridField& b);

}  // namespace stratmhd::spectral
