#include "ulfp/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>

#include "ulfp/errors.hpp"

namespace ulfp {

using nlohmann::json;

namespace {

// Strips comments; returns false for lines with nothing left.
bool content(std::string& line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    return !std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

std::vector<Slope> read_slope_list(std::istream& in) {
    std::vector<Slope> out;
    std::string line;
    while (std::getline(in, line))
        if (content(line)) out.push_back(parse_slope(line));
    return out;
}

std::vector<std::pair<Slope, Slope>> read_slope_pairs(std::istream& in) {
    std::vector<std::pair<Slope, Slope>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!content(line)) continue;
        std::istringstream row(line);
        std::string x, y, extra;
        if (!(row >> x >> y) || (row >> extra)) throw ParseError("expected 'p/q r/s', got '" + line + "'");
        out.emplace_back(parse_slope(x), parse_slope(y));
    }
    return out;
}

std::vector<Slope> parse_slope_csv(std::string_view text) {
    std::vector<Slope> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_slope(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

json to_json(const Slope& s) { return to_string(s); }

json to_json(std::span<const Slope> slopes) {
    json out = json::array();
    for (const auto& s : slopes) out.push_back(to_string(s));
    return out;
}

json to_json(const SubsurfaceRef& z) {
    if (z.is_whole()) return {{"kind", "whole"}};
    return {{"kind", "annulus"}, {"core", to_string(z.annulus().core())}};
}

json to_json(const UlfpCertificate& cert) {
    if (const auto* w = std::get_if<Witness>(&cert))
        return {{"type", "witness"}, {"subsurface", to_json(w->subsurface)}, {"slopes", to_json(w->slopes)}};
    const auto& cover = std::get<Covered>(cert);
    json entries = json::array();
    for (const auto& e : cover.entries)
        entries.push_back({{"subsurface", to_json(e.subsurface)}, {"centers", to_json(e.centers)}});
    return {{"type", "covered"}, {"radius", cover.radius}, {"centers", entries}};
}

json to_json(const bounds::BigBound& b) {
    return {{"mode", b.mode() == bounds::Mode::Exact ? "exact" : "log10"}, {"value", b.to_string()}};
}

json to_json(const BgitAudit& audit) {
    json out{{"value", audit.value}, {"pairs_checked", audit.pairs_checked}, {"pairs_skipped", audit.pairs_skipped}};
    if (audit.attained) {
        const auto& at = *audit.attained;
        out["attained"] = {{"x", to_string(at.x)},
                           {"y", to_string(at.y)},
                           {"geodesic", to_json(at.geodesic.vertices())},
                           {"vertex", to_string(at.vertex)},
                           {"core", to_string(at.core)}};
    } else {
        out["attained"] = nullptr;
    }
    return out;
}

json to_json(const WeakTightReport& report) {
    json out{{"geodesic", to_json(report.geodesic.vertices())}, {"index", report.index}};
    if (report.attaining)
        out["attaining"] = {{"vertex", to_string(report.attaining->vertex)},
                            {"core", to_string(report.attaining->core)}};
    else
        out["attaining"] = nullptr;
    return out;
}

json to_json(const SliceVerification& v) {
    json flags = json::object();
    for (const auto& [name, ok] : v.hypothesis_flags) flags[name] = ok;
    // Six decimals keep the report byte-stable across platforms.
    const double margin = std::round(static_cast<double>(v.margin_log10) * 1e6) / 1e6;
    return {{"query",
             {{"a", to_string(v.query.a)},
              {"b", to_string(v.query.b)},
              {"c", to_string(v.query.c)},
              {"delta", v.query.delta},
              {"r", v.query.r}}},
            {"slice", to_json(v.slice)},
            {"size", v.slice.size()},
            {"exact", v.exact},
            {"bound", v.bound.to_string()},
            {"bound_label", v.bound_label},
            {"margin_log10", margin},
            {"hypothesis_flags", flags},
            {"passed", v.passed}};
}

json annular_record(SurfaceKind kind, const Annulus& z, const Slope& y, const Slope& w) {
    return {{"core", to_string(z.core())},
            {"twist", {to_string(twist_coord(z, y)), to_string(twist_coord(z, w))}},
            {"distance", annular_distance(kind, z, y, w)}};
}

}  // namespace ulfp
