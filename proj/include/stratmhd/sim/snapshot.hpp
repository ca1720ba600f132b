#pragma once

#include <string>

#include "stratmhd/sim/state.hpp"

namespace stratmhd::sim {

/// Binary snapshot: "SMHDSNAP", u32 version (1), u32 nx, u32 ny, f64 lx, f64 t,
/// then u1, u2, rho as little-endian f64 (re, im) pairs ordered by j from
/// -nx/2 upward, q varying fastest.
void write_snapshot(const std::string& path, const PerturbationState& s);
PerturbationState read_snapshot(const std::string& path);

}  // namespace stratmhd::sim
