#include "ulfp/projections.hpp"

#include <algorithm>
#include <set>

#include "ulfp/errors.hpp"
#include "ulfp/graph.hpp"

namespace ulfp {

namespace {

std::vector<Slope> sorted_unique(std::span<const Slope> a) {
    std::vector<Slope> out(a.begin(), a.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Slope> projecting_members(const SubsurfaceRef& z, std::span<const Slope> a) {
    std::vector<Slope> out;
    for (const auto& s : sorted_unique(a))
        if (projects(z, s)) out.push_back(s);
    return out;
}

void check_lk(std::int64_t l, int k) {
    if (l <= 0) throw PreconditionViolation("l must be positive");
    if (k <= 1) throw PreconditionViolation("k must exceed 1");
    if (k > max_witness_size)
        throw PreconditionViolation("exact witness search supports k <= " + std::to_string(max_witness_size));
}

// Finds a k-clique in `far`, trying vertices in index order.
bool find_clique(const std::vector<std::vector<char>>& far, int k, std::vector<int>& clique,
                 const std::vector<int>& candidates) {
    if (static_cast<int>(clique.size()) == k) return true;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        if (clique.size() + (candidates.size() - idx) < static_cast<std::size_t>(k)) return false;
        const int v = candidates[idx];
        std::vector<int> next;
        for (std::size_t j = idx + 1; j < candidates.size(); ++j)
            if (far[v][candidates[j]]) next.push_back(candidates[j]);
        clique.push_back(v);
        if (find_clique(far, k, clique, next)) return true;
        clique.pop_back();
    }
    return false;
}

}  // namespace

std::string to_string(const SubsurfaceRef& z) {
    return z.is_whole() ? std::string("S") : "R(" + to_string(z.annulus().core()) + ")";
}

bool projects(const SubsurfaceRef& z, const Slope& y) { return z.is_whole() || projects(z.annulus(), y); }

std::int64_t proj_distance(SurfaceKind kind, const SubsurfaceRef& z, const Slope& y, const Slope& w) {
    if (z.is_whole()) return distance(y, w);
    return annular_distance(kind, z.annulus(), y, w);
}

std::vector<SubsurfaceRef> candidate_subsurfaces(SurfaceKind, std::span<const Slope> a) {
    const auto members = sorted_unique(a);
    if (members.size() < 2) throw PreconditionViolation("candidate_subsurfaces requires at least two curves");
    std::set<Slope> cores;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            for (const auto& v : geodesic_vertices(members[i], members[j])) cores.insert(v);
    std::vector<SubsurfaceRef> out{SubsurfaceRef::whole()};
    for (const auto& c : cores) out.push_back(SubsurfaceRef::annulus(c));
    return out;
}

PropertyPReport check_P(SurfaceKind kind, std::span<const Slope> a, std::int64_t l, int k, const SubsurfaceRef& z) {
    check_lk(l, k);
    PropertyPReport report;
    report.checked_subsurfaces = 1;
    const auto members = projecting_members(z, a);
    const auto n = members.size();
    if (n < static_cast<std::size_t>(k)) return report;

    std::vector<std::vector<char>> far(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            far[i][j] = far[j][i] = proj_distance(kind, z, members[i], members[j]) > l;

    std::vector<int> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
    std::vector<int> clique;
    if (find_clique(far, k, clique, all)) {
        Witness w;
        for (int i : clique) w.slopes.push_back(members[i]);
        w.subsurface = z;
        report.holds = false;
        report.witness = std::move(w);
    }
    return report;
}

PropertyPReport check_P_all(SurfaceKind kind, std::span<const Slope> a, std::int64_t l, int k) {
    check_lk(l, k);
    PropertyPReport total;
    if (sorted_unique(a).size() < 2) return total;
    for (const auto& z : candidate_subsurfaces(kind, a)) {
        auto r = check_P(kind, a, l, k, z);
        total.checked_subsurfaces += r.checked_subsurfaces;
        if (!r.holds) {
            total.holds = false;
            total.witness = std::move(r.witness);
            return total;
        }
    }
    return total;
}

UlfpCertificate ulfp_witness(SurfaceKind kind, std::span<const Slope> a, std::int64_t l, int k) {
    auto report = check_P_all(kind, a, l, k);
    if (!report.holds) return *report.witness;

    Covered cover;
    cover.radius = l;
    const auto members = sorted_unique(a);
    const auto subsurfaces =
        members.size() < 2 ? std::vector<SubsurfaceRef>{SubsurfaceRef::whole()} : candidate_subsurfaces(kind, a);
    for (const auto& z : subsurfaces) {
        const auto proj = projecting_members(z, members);
        auto dist = [&](std::size_t i, std::size_t j) { return proj_distance(kind, z, proj[i], proj[j]); };
        const auto pick = graph::greedy_separated_by(proj.size(), l, k, dist);
        std::vector<Slope> chosen;
        for (auto i : pick.chosen) chosen.push_back(proj[i]);
        // A greedy pick of size k is itself a witness; P(l, k, Z) rules it out.
        if (pick.reached_k) return Witness{std::move(chosen), z};
        cover.entries.push_back({z, std::move(chosen)});
    }
    return cover;
}

bool verify_certificate(SurfaceKind kind, std::span<const Slope> a, std::int64_t l, int k, const UlfpCertificate& cert) {
    const auto members = sorted_unique(a);
    if (const auto* w = std::get_if<Witness>(&cert)) {
        if (static_cast<int>(w->slopes.size()) != k) return false;
        for (const auto& s : w->slopes)
            if (!std::binary_search(members.begin(), members.end(), s) || !projects(w->subsurface, s)) return false;
        for (std::size_t i = 0; i < w->slopes.size(); ++i)
            for (std::size_t j = i + 1; j < w->slopes.size(); ++j)
                if (proj_distance(kind, w->subsurface, w->slopes[i], w->slopes[j]) <= l) return false;
        return true;
    }
    const auto& cover = std::get<Covered>(cert);
    if (cover.radius != l) return false;
    if (members.size() >= 2) {
        const auto expected = candidate_subsurfaces(kind, members);
        if (expected.size() != cover.entries.size()) return false;
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (!(expected[i] == cover.entries[i].subsurface)) return false;
    }
    for (const auto& entry : cover.entries) {
        if (static_cast<int>(entry.centers.size()) > k - 1) return false;
        for (const auto& s : projecting_members(entry.subsurface, members)) {
            const bool near = std::any_of(entry.centers.begin(), entry.centers.end(), [&](const Slope& c) {
                return c == s || proj_distance(kind, entry.subsurface, c, s) <= l;
            });
            if (!near) return false;
        }
    }
    return true;
}

std::vector<std::pair<Slope, Slope>> lemma_co_pairs(SurfaceKind, const Slope& x, std::span<const Slope> b, int i) {
    if (i <= 1) throw PreconditionViolation("lemma_co_construct requires i > 1");
    std::vector<std::pair<Slope, Slope>> out;
    for (const auto& s : sorted_unique(b)) {
        if (distance(x, s) != i)
            throw PreconditionViolation("curve " + to_string(s) + " is not at distance " + std::to_string(i) + " from " +
                                        to_string(x));
        out.emplace_back(s, geodesics(x, s).front()[1]);
    }
    return out;
}

std::vector<Slope> lemma_co_construct(SurfaceKind kind, const Slope& x, std::span<const Slope> b, int i) {
    std::vector<Slope> out;
    for (const auto& [source, step] : lemma_co_pairs(kind, x, b, i)) out.push_back(step);
    return sorted_unique(out);
}

BgitAudit bgit_audit(SurfaceKind kind, std::span<const std::pair<Slope, Slope>> pairs) {
    BgitAudit audit;
    for (const auto& [x, y] : pairs) {
        if (distance(x, y) <= 2) {
            ++audit.pairs_skipped;
            continue;
        }
        ++audit.pairs_checked;
        const Slope ends[] = {x, y};
        const auto subsurfaces = candidate_subsurfaces(kind, ends);
        for (const auto& g : geodesics(x, y)) {
            for (int idx = 1; idx < g.length(); ++idx) {
                const Slope& v = g[idx];
                for (const auto& z : subsurfaces) {
                    if (z.is_whole() || !projects(z, v)) continue;
                    const auto& ann = z.annulus();
                    const auto m = std::min(one_sided_distance(kind, ann, x, v), one_sided_distance(kind, ann, y, v));
                    if (m > audit.value) {
                        audit.value = m;
                        audit.attained = BgitAttainment{x, y, g, v, ann.core()};
                    }
                }
            }
        }
    }
    return audit;
}

}  // namespace ulfp
