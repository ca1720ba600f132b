#include "stratmhd/spectral/grid.hpp"

#include <cmath>
#include <string>

#include "stratmhd/error.hpp"

namespace stratmhd::spectral {

void Grid::validate() const {
  if (!(lx > 0.0) || !std::isfinite(lx)) {
    throw InvalidArgument("l_x must be positive");
  }
  if (nx < 2 || nx % 2 != 0) {
    throw InvalidArgument("n_x must be even and >= 2, got " + std::to_string(nx));
  }
  if (ny < 3) {
    throw InvalidArgument("n_y must be >= 3, got " + std::to_string(ny));
  }
}

const char* to_string(Parity p) { return p == Parity::EvenY ? "EvenY" : "OddY"; }

}  // namespace stratmhd::spectral
