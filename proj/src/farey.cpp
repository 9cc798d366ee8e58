#include "ulfp/farey.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ulfp/errors.hpp"

namespace ulfp {

using detail::add;
using detail::mul;
using detail::sub;

namespace {

__extension__ using i128 = __int128;

std::int64_t cross(const Slope& x, const Slope& y) { return sub(mul(x.p(), y.q()), mul(x.q(), y.p())); }

std::int64_t abs_checked(std::int64_t v) {
    if (v == INT64_MIN) throw std::overflow_error("slope arithmetic overflow");
    return v < 0 ? -v : v;
}

// Modular inverse of a modulo m (m > 1, gcd(a, m) = 1), in [0, m).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    i128 r0 = m, r1 = ((a % m) + m) % m;
    i128 s0 = 0, s1 = 1;
    while (r1 != 0) {
        const i128 quot = r0 / r1;
        const i128 r2 = r0 - quot * r1;
        r0 = r1;
        r1 = r2;
        const i128 s2 = s0 - quot * s1;
        s0 = s1;
        s1 = s2;
    }
    i128 v = s0 % m;
    if (v < 0) v += m;
    return static_cast<std::int64_t>(v);
}

// The shear t -> t + shift conjugated by the normalizer of x.
Slope conjugated_shear(const Slope& x, std::int64_t shift, const Slope& y) {
    if (shift == 0) return y;
    const MobiusMap g = normalizer_to_infinity(x);
    const Slope t = g.apply(y);
    const Slope sheared{add(t.p(), mul(shift, t.q())), t.q()};
    return g.inverse().apply(sheared);
}

// Induced subgraph of the Farey graph on the pivot candidates of (x, y).
struct Ladder {
    std::vector<Slope> vertices;
    std::vector<std::vector<int>> adjacency;

    explicit Ladder(std::vector<Slope> v) : vertices(std::move(v)), adjacency(vertices.size()) {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (adjacent(vertices[i], vertices[j])) {
                    adjacency[i].push_back(static_cast<int>(j));
                    adjacency[j].push_back(static_cast<int>(i));
                }
    }

    int index_of(const Slope& s) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
        return static_cast<int>(it - vertices.begin());
    }

    std::vector<int> bfs(int source) const {
        std::vector<int> dist(vertices.size(), -1);
        std::deque<int> queue{source};
        dist[source] = 0;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : adjacency[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }
};

}  // namespace

std::int64_t intersection(SurfaceKind kind, const Slope& x, const Slope& y) {
    const auto i = abs_checked(cross(x, y));
    return kind == SurfaceKind::Torus11 ? i : mul(2, i);
}

bool adjacent(const Slope& x, const Slope& y) {
    const auto c = cross(x, y);
    return c == 1 || c == -1;
}

MobiusMap normalizer_to_infinity(const Slope& x) {
    if (x.is_infinity()) return MobiusMap::identity();
    const std::int64_t p = x.p(), q = x.q();
    const std::int64_t v = q == 1 ? 0 : inverse_mod(p, q);
    const auto u = static_cast<std::int64_t>((static_cast<i128>(p) * v - 1) / q);
    return MobiusMap{v, -u, -q, p};
}

Slope dehn_twist(SurfaceKind kind, const Slope& x, std::int64_t n, const Slope& y) {
    return conjugated_shear(x, mul(n, twist_unit(kind)), y);
}

Slope half_twist(const Slope& x, std::int64_t n, const Slope& y) { return conjugated_shear(x, n, y); }

std::vector<Slope> pivot_candidates(const Slope& x, const Slope& y) {
    if (x == y) throw PreconditionViolation("pivot_candidates requires distinct slopes");
    const MobiusMap g = normalizer_to_infinity(x);
    const MobiusMap back = g.inverse();
    const Slope r = g.apply(y);

    // In the normalized chart the line runs vertically from 1/0 down to r.
    std::vector<Slope> chart{Slope::infinity()};
    const std::int64_t floor_r = detail::floor_div(r.p(), r.q());
    if (r.q() == 1) {
        chart.push_back(r);
    } else {
        Slope left = Slope::integer(floor_r);
        Slope right = Slope::integer(add(floor_r, 1));
        chart.push_back(left);
        chart.push_back(right);
        while (true) {
            const Slope mediant{add(left.p(), right.p()), add(left.q(), right.q())};
            chart.push_back(mediant);
            if (mediant == r) break;
            // r < mediant  <=>  r.p * m.q < m.p * r.q  (both denominators positive)
            const auto lhs = static_cast<i128>(r.p()) * mediant.q();
            const auto rhs = static_cast<i128>(mediant.p()) * r.q();
            if (lhs < rhs)
                right = mediant;
            else
                left = mediant;
        }
    }

    std::vector<Slope> out;
    out.reserve(chart.size());
    for (const auto& s : chart) out.push_back(back.apply(s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int distance(const Slope& x, const Slope& y) {
    if (x == y) return 0;
    if (adjacent(x, y)) return 1;
    const Ladder ladder(pivot_candidates(x, y));
    return ladder.bfs(ladder.index_of(x))[ladder.index_of(y)];
}

Geodesic Geodesic::certify(std::vector<Slope> vertices) {
    if (vertices.empty()) throw PreconditionViolation("geodesic needs at least one vertex");
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (!adjacent(vertices[i - 1], vertices[i]))
            throw PreconditionViolation("consecutive geodesic vertices " + to_string(vertices[i - 1]) + ", " +
                                        to_string(vertices[i]) + " are not Farey neighbours");
    const auto len = static_cast<int>(vertices.size()) - 1;
    if (distance(vertices.front(), vertices.back()) != len)
        throw PreconditionViolation("path of length " + std::to_string(len) + " is not a geodesic");
    return Geodesic{std::move(vertices)};
}

std::vector<Geodesic> geodesics(const Slope& x, const Slope& y) {
    if (x == y) return {Geodesic{{x}}};
    const Ladder ladder(pivot_candidates(x, y));
    const int src = ladder.index_of(x);
    const int dst = ladder.index_of(y);
    const auto to_dst = ladder.bfs(dst);

    // Sorted neighbour lists make the depth-first walk emit paths in
    // lexicographic order.
    std::vector<Geodesic> out;
    std::vector<Slope> path{x};
    auto walk = [&](auto&& self, int v) -> void {
        if (v == dst) {
            out.push_back(Geodesic{path});
            return;
        }
        for (int w : ladder.adjacency[v]) {
            if (to_dst[w] != to_dst[v] - 1) continue;
            path.push_back(ladder.vertices[w]);
            self(self, w);
            path.pop_back();
        }
    };
    walk(walk, src);
    return out;
}

std::vector<Slope> link_at_distance(const Slope& x, const Slope& target, int d) {
    if (d < 0) throw PreconditionViolation("link_at_distance requires d >= 0");
    if (x == target) return {};
    std::vector<Slope> out;
    for (const auto& v : pivot_candidates(x, target))
        if (adjacent(v, x) && distance(v, target) == d) out.push_back(v);
    return out;
}

std::vector<Slope> geodesic_vertices(const Slope& x, const Slope& y) {
    std::vector<Slope> out;
    for (const auto& g : geodesics(x, y)) out.insert(out.end(), g.vertices().begin(), g.vertices().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(const Geodesic& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        if (i) os << ',';
        os << g[i];
    }
    return os.str();
}

}  // namespace ulfp
