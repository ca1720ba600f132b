#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include <Eigen/Core>

#include "stratmhd/fields.hpp"

namespace stratmhd::sim {

/// Versioned generator: std::mt19937_64 (fully specified by the standard)
/// with 53-bit uniform doubles built by hand, so draws are identical on every
/// conforming platform.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64-uniform53-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// Random band-limited perturbation: divergence-free velocity from an OddY
/// stream function, EvenY rho with zero y-mean, supported inside the
/// dealiasing band, rescaled so ||u||_{H^k} + ||rho||_{H^{k+1}} = epsilon0.
Fields random_initial(const spectral::Grid& g, double epsilon0, int k_order, Rng& rng);
Fields random_initial(const spectral::Grid& g, double epsilon0, int k_order, std::uint64_t seed);

/// ||u||_{H^k} + ||rho||_{H^{k+1}}.
double initial_size(const Fields& f, int k_order);

/// Random zero-mean cosine coefficients (length ny) for (phi0, psi0) with
/// ||phi0||_{L2} + ||psi0||_{L2} = amplitude, supported in the dealiasing band.
std::pair<Eigen::VectorXd, Eigen::VectorXd> random_background(int ny, double amplitude,
                                                               int k_order, Rng& rng);

}  // namespace stratmhd::sim
