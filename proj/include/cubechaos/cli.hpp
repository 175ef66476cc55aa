#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cubechaos/shift.hpp"

namespace cubechaos::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// "step,x1,...,xn" followed by one row per step, 12 truncated decimals.
std::string render_orbit_csv(const OrbitRecord& record);
std::string render_orbit_json(const OrbitRecord& record);

// Entry point behind the cubechaos binary. args excludes the program name.
// Output goes to --out when given, otherwise to `out`; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cubechaos::cli
