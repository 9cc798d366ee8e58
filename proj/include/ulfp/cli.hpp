#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ulfp/slope.hpp"

namespace ulfp::cli {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int report_schema_version = 1;

/// Runtime configuration. M and delta have no canonical numeric value;
/// the defaults are placeholders and every report echoes what was used.
struct Config {
    int M = 100;
    int delta = 17;
    SurfaceKind kind = SurfaceKind::Torus11;
    std::uint64_t seed = 0;
    std::size_t exact_digit_cap = 1'000'000;
};

enum ExitCode : int { ok = 0, failure = 1, parse_error = 2, violation = 3 };

/// Runs one subcommand; writes the JSON run report to `out` and
/// diagnostics to `err`. Environment: ULFP_M, ULFP_DELTA, ULFP_SEED.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ulfp::cli
