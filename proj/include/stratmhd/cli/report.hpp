#pragma once

#include <iosfwd>
#include <string>

namespace stratmhd::cli {

/// Recomputes rates and verdicts from run_dir/energy.csv, taking parameters
/// from run_dir/manifest.json when present. Prints a text summary followed
/// by one JSON object and returns the JSON text.
/// Throws Error("too few samples"), Error("non-positive energy sample") or
/// on a missing or corrupt CSV.
std::string emit_report(const std::string& run_dir, std::ostream& out);

}  // namespace stratmhd::cli
