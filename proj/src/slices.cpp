#include "ulfp/slices.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ulfp/annular.hpp"
#include "ulfp/errors.hpp"
#include "ulfp/projections.hpp"

namespace ulfp {

namespace {

constexpr std::int64_t fan_reach = 8;

std::vector<Slope> within(std::vector<Slope> vs, const Slope& c, int delta) {
    std::erase_if(vs, [&](const Slope& v) { return distance(v, c) > delta; });
    return vs;
}

// Index of g against a fixed list of candidate subsurfaces.
WeakTightReport index_against(SurfaceKind kind, const Geodesic& g, const std::vector<SubsurfaceRef>& subsurfaces) {
    WeakTightReport report{g, 0, std::nullopt};
    const Slope& x = g.front();
    const Slope& y = g.back();
    for (const auto& v : g.vertices()) {
        for (const auto& z : subsurfaces) {
            if (z.is_whole() || !projects(z, v)) continue;
            const auto& ann = z.annulus();
            const auto m = std::min(one_sided_distance(kind, ann, x, v), one_sided_distance(kind, ann, y, v));
            if (m > report.index) {
                report.index = m;
                report.attaining = WeakTightReport::Attainment{v, ann.core()};
            }
        }
    }
    return report;
}

void require_far_endpoints(const Slope& a, const Slope& b) {
    if (distance(a, b) <= 2)
        throw PreconditionViolation("weak tightness is defined only for endpoints with d_S(x,y) > 2");
}

// Every sub-geodesic of a geodesic from a to b extends to one, so the
// candidate annuli of any geodesic's vertex set are those of {a, b}.
std::vector<SubsurfaceRef> endpoint_candidates(SurfaceKind kind, const Slope& a, const Slope& b) {
    const Slope ends[] = {a, b};
    return candidate_subsurfaces(kind, ends);
}

std::vector<Slope> weak_slice_impl(SurfaceKind kind, const Slope& a, const Slope& b, const Slope& c, int delta,
                                   std::int64_t D) {
    const auto subsurfaces = endpoint_candidates(kind, a, b);
    std::set<Slope> members;
    for (const auto& g : geodesics(a, b)) {
        if (index_against(kind, g, subsurfaces).index > D) continue;
        for (const auto& v : g.vertices())
            if (distance(v, c) <= delta) members.insert(v);
    }
    return {members.begin(), members.end()};
}

// Union of per-pair slices over sampled endpoint pairs in N_r(a) x N_r(b).
RadiusSliceSample sample_union(const Slope& a, const Slope& b, int r, std::size_t budget, std::uint64_t seed,
                               int hyperbolicity,
                               const std::function<std::vector<Slope>(const Slope&, const Slope&)>& slice_of) {
    RadiusSliceSample out;
    out.hypothesis_holds = distance(a, b) >= 2 * r + 2 * separation_constant(hyperbolicity) + 1;
    std::mt19937_64 rng(seed);
    std::set<Slope> members;
    for (std::size_t i = 0; i < budget; ++i) {
        const Slope a2 = r == 0 ? a : random_ball_point(a, r, rng);
        const Slope b2 = r == 0 ? b : random_ball_point(b, r, rng);
        ++out.samples;
        for (const auto& v : slice_of(a2, b2)) members.insert(v);
    }
    out.subset.assign(members.begin(), members.end());
    return out;
}

}  // namespace

std::vector<Slope> tight_slice(SurfaceKind, const Slope& a, const Slope& b, const Slope& c, int delta) {
    if (delta < 0) throw PreconditionViolation("slice radius must be nonnegative");
    return within(geodesic_vertices(a, b), c, delta);
}

WeakTightReport weak_tight_index(SurfaceKind kind, const Geodesic& g) {
    require_far_endpoints(g.front(), g.back());
    return index_against(kind, g, candidate_subsurfaces(kind, g.vertices()));
}

std::vector<Slope> weak_tight_slice(SurfaceKind kind, const Slope& a, const Slope& b, const Slope& c, int delta,
                                    std::int64_t D) {
    if (delta < 0) throw PreconditionViolation("slice radius must be nonnegative");
    require_far_endpoints(a, b);
    return weak_slice_impl(kind, a, b, c, delta, D);
}

Slope random_ball_point(const Slope& center, int r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> steps(0, r);
    std::uniform_int_distribution<std::int64_t> fan(-fan_reach, fan_reach);
    Slope v = center;
    for (int s = steps(rng); s > 0; --s) v = normalizer_to_infinity(v).inverse().apply(Slope::integer(fan(rng)));
    return v;
}

RadiusSliceSample radius_slice_sample(SurfaceKind kind, const Slope& a, const Slope& b, int r, const Slope& c,
                                      int delta, std::size_t budget, std::uint64_t seed, int hyperbolicity) {
    if (r < 0) throw PreconditionViolation("ball radius must be nonnegative");
    return sample_union(a, b, r, budget, seed, hyperbolicity, [&](const Slope& a2, const Slope& b2) {
        return tight_slice(kind, a2, b2, c, delta);
    });
}

SliceVerification verify_slice_bounds(SurfaceKind kind, const SliceQuery& q, const SliceHarnessOptions& opts) {
    SliceVerification out;
    out.query = q;

    const auto on_geodesic = geodesic_vertices(q.a, q.b);
    if (!std::binary_search(on_geodesic.begin(), on_geodesic.end(), q.c))
        throw HypothesisViolation("hypothesis c in g_{a,b} fails: " + to_string(q.c) +
                                  " lies on no geodesic between " + to_string(q.a) + " and " + to_string(q.b));
    out.hypothesis_flags["c_on_geodesic"] = true;

    const int dab = distance(q.a, q.b);
    if (q.r > 0) {
        const int j = separation_constant(opts.hyperbolicity);
        if (dab < 2 * q.r + 2 * j + 1)
            throw HypothesisViolation("hypothesis d_S(a,b) >= 2r+2j+1 (j = 3*delta+2 = " + std::to_string(j) +
                                      ") fails: d_S(a,b) = " + std::to_string(dab));
        out.hypothesis_flags["endpoint_separation"] = true;
        if (distance(q.c, q.a) <= q.r + j || distance(q.c, q.b) <= q.r + j)
            throw HypothesisViolation("hypothesis c not in N_{r+j}(a) u N_{r+j}(b) fails");
        out.hypothesis_flags["c_outside_endpoint_balls"] = true;
    }

    const auto surface = bounds::surface_for(kind);
    if (opts.D) {
        const auto [near, far] = bounds::slice_bound_weak(surface, static_cast<int>(*opts.D), opts.M);
        if (dab <= 2) throw HypothesisViolation("hypothesis d_S(a,b) > 2 for weakly tight geodesics fails");
        out.hypothesis_flags["weak_tight_defined"] = true;
        if (q.r == 0) {
            out.slice = weak_slice_impl(kind, q.a, q.b, q.c, q.delta, *opts.D);
            out.bound = near;
            out.bound_label = "N_S(2D,3)";
        } else {
            out.slice = sample_union(q.a, q.b, q.r, opts.budget, opts.seed, opts.hyperbolicity,
                                     [&](const Slope& a2, const Slope& b2) {
                                         if (distance(a2, b2) <= 2) return std::vector<Slope>{};
                                         return weak_slice_impl(kind, a2, b2, q.c, q.delta, *opts.D);
                                     })
                            .subset;
            out.exact = false;
            out.bound = far;
            out.bound_label = "N_S(2(D+M),3)";
        }
    } else {
        const auto [near, far] = bounds::slice_bound_tight(surface, opts.M);
        if (q.r == 0) {
            out.slice = tight_slice(kind, q.a, q.b, q.c, q.delta);
            out.bound = near;
            out.bound_label = "N_S(2M,3)";
        } else {
            out.slice = radius_slice_sample(kind, q.a, q.b, q.r, q.c, q.delta, opts.budget, opts.seed,
                                            opts.hyperbolicity)
                            .subset;
            out.exact = false;
            out.bound = far;
            out.bound_label = "N_S(4M,3)";
        }
    }

    const auto size = bounds::BigBound::exact(BigInt(out.slice.size()));
    out.passed = bounds::compare(size, out.bound) <= 0;
    out.margin_log10 = out.bound.log10_upper() - (out.slice.empty() ? 0.0L : bounds::log10_of(BigInt(out.slice.size())));
    return out;
}

}  // namespace ulfp
