#include "stratmhd/params.hpp"

#include <cmath>
#include <string>

#include "stratmhd/error.hpp"

namespace stratmhd {

void Params::validate() const {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw InvalidArgument("kappa must be positive, got " + std::to_string(kappa));
  }
  if (c0 == 0.0 || !std::isfinite(c0)) {
    throw InvalidArgument("c0 must be finite and nonzero");
  }
  if (k_order < 0) {
    throw InvalidArgument("k_order must be non-negative");
  }
  if (k_order < 7 && !allow_low_order) {
    throw InvalidArgument("k_order must be >= 7 (got " + std::to_string(k_order) +
                          "); set allow_low_order to override");
  }
  grid.validate();
}

}  // namespace stratmhd
