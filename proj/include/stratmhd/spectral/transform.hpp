#pragma once

#include "stratmhd/spectral/spectrum.hpp"

namespace stratmhd::spectral {

/// Grid samples to basis coefficients. Exact for band-limited input.
/// Throws InvalidArgument on shape mismatch or non-finite samples.
Spectrum forward(const GridField& f);

/// Basis coefficients to grid samples.
GridField inverse(const Spectrum& s);

/// Copies s onto a finer grid of the same domain (zero padding).
Spectrum pad_to(const Spectrum& s, const Grid& fine);

/// Drops modes that the coarse grid cannot hold.
Spectrum truncate_to(const Spectrum& s, const Grid& coarse);

}  // namespace stratmhd::spectral
