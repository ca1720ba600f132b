#pragma once

#include <iosfwd>

namespace stratmhd::cli {

/// Oracle cross-checks on this machine. One PASS/FAIL line per check;
/// returns the number of failures.
int selftest(std::ostream& out);

}  // namespace stratmhd::cli
