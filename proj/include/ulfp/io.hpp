#pragma once

// Text formats and JSON encodings shared by the CLI and the tests.

#include <iosfwd>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ulfp/bounds.hpp"
#include "ulfp/projections.hpp"
#include "ulfp/slices.hpp"

namespace ulfp {

/// One slope per line; '#' starts a comment; blank lines ignored.
std::vector<Slope> read_slope_list(std::istream& in);

/// Lines "p/q r/s".
std::vector<std::pair<Slope, Slope>> read_slope_pairs(std::istream& in);

/// Comma-separated slopes, e.g. "1/0,0/1,1/3,3/8".
std::vector<Slope> parse_slope_csv(std::string_view text);

nlohmann::json to_json(const Slope& s);
nlohmann::json to_json(std::span<const Slope> slopes);
nlohmann::json to_json(const SubsurfaceRef& z);
nlohmann::json to_json(const UlfpCertificate& cert);
nlohmann::json to_json(const bounds::BigBound& b);
nlohmann::json to_json(const BgitAudit& audit);
nlohmann::json to_json(const WeakTightReport& report);
nlohmann::json to_json(const SliceVerification& v);

/// {core, twist, distance} record for annular audit dumps; `distance` is
/// d^_Z(y, w).
nlohmann::json annular_record(SurfaceKind kind, const Annulus& z, const Slope& y, const Slope& w);

}  // namespace ulfp
