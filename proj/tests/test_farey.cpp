#include <doctest.h>

#include <set>

#include "support/test_support.hpp"
#include "ulfp/errors.hpp"
#include "ulfp/farey.hpp"

using namespace ulfp;
using ulfp::testing::FareyBox;

namespace {

Slope s(std::int64_t p, std::int64_t q) { return Slope(p, q); }

std::vector<std::vector<Slope>> as_paths(const std::vector<Geodesic>& gs) {
    std::vector<std::vector<Slope>> out;
    for (const auto& g : gs) out.emplace_back(g.vertices().begin(), g.vertices().end());
    return out;
}

}  // namespace

TEST_CASE("canonical form") {
    CHECK(canonical(2, 4) == s(1, 2));
    CHECK(canonical(-3, 0) == Slope::infinity());
    CHECK(canonical(3, -6) == s(-1, 2));
    CHECK(canonical(3, -6).q() == 2);
    CHECK_THROWS_AS(canonical(0, 0), PreconditionViolation);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> any(-1000, 1000);
    for (int i = 0; i < 2000; ++i) {
        const auto p = any(rng), q = any(rng);
        if (p == 0 && q == 0) continue;
        const auto c = canonical(p, q);
        CHECK(canonical(c.p(), c.q()) == c);
        CHECK(c.q() >= 0);
        CHECK(std::gcd(c.p(), c.q()) == 1);
        CHECK(c.p() * q == c.q() * p);
    }
}

TEST_CASE("slope text round trip") {
    for (const auto& t : {"1/0", "0/1", "-3/8", "13/3"}) CHECK(to_string(parse_slope(t)) == t);
    CHECK(parse_slope("5") == s(5, 1));
    CHECK(parse_slope("4/-6") == s(-2, 3));
    CHECK_THROWS_AS(parse_slope("x"), ParseError);
    CHECK_THROWS_AS(parse_slope("1/"), ParseError);
    CHECK_THROWS_AS(parse_slope("0/0"), ParseError);
}

TEST_CASE("intersection and adjacency") {
    CHECK(intersection(SurfaceKind::Torus11, Slope::infinity(), s(0, 1)) == 1);
    CHECK(intersection(SurfaceKind::Sphere04, Slope::infinity(), s(0, 1)) == 2);
    CHECK(intersection(SurfaceKind::Torus11, s(1, 2), s(1, 2)) == 0);
    CHECK(adjacent(Slope::infinity(), s(0, 1)));
    CHECK(adjacent(s(1, 3), s(2, 5)));
    CHECK_FALSE(adjacent(Slope::infinity(), s(1, 2)));
    CHECK_FALSE(adjacent(s(1, 2), s(1, 2)));
}

TEST_CASE("Mobius action") {
    CHECK(apply(MobiusMap(0, 1, 1, 0), s(2, 5)) == s(5, 2));
    CHECK(apply(MobiusMap::identity(), s(3, 8)) == s(3, 8));
    CHECK(apply(MobiusMap(1, 1, 0, 1), s(1, 3)) == s(4, 3));
    CHECK_THROWS_AS(MobiusMap(2, 0, 0, 1), PreconditionViolation);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const auto m = testing::random_mobius(rng);
        const auto x = testing::random_slope(rng, 40), y = testing::random_slope(rng, 40);
        CHECK(m.inverse().apply(m.apply(x)) == x);
        CHECK(adjacent(x, y) == adjacent(m.apply(x), m.apply(y)));
        for (auto kind : {SurfaceKind::Torus11, SurfaceKind::Sphere04})
            CHECK(intersection(kind, x, y) == intersection(kind, m.apply(x), m.apply(y)));
    }
}

TEST_CASE("normalizer to infinity") {
    CHECK(normalizer_to_infinity(Slope::infinity()) == MobiusMap::identity());
    CHECK(apply(normalizer_to_infinity(s(0, 1)), s(0, 1)) == Slope::infinity());
    CHECK(apply(normalizer_to_infinity(s(3, 8)), s(3, 8)) == Slope::infinity());

    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        const auto x = testing::random_slope(rng, 500);
        const auto g = normalizer_to_infinity(x);
        CHECK(g.apply(x) == Slope::infinity());
        if (!x.is_infinity()) {
            // g = (v, -u; -q, p) with 0 <= v < q
            CHECK(g.c() == -x.q());
            CHECK(g.d() == x.p());
            CHECK(g.a() >= 0);
            CHECK(g.a() < x.q());
        }
    }
}

TEST_CASE("Dehn and half twists") {
    CHECK(dehn_twist(SurfaceKind::Torus11, Slope::infinity(), 4, s(1, 3)) == s(13, 3));
    for (auto kind : {SurfaceKind::Torus11, SurfaceKind::Sphere04}) CHECK(dehn_twist(kind, s(2, 7), 0, s(1, 3)) == s(1, 3));

    const auto t = dehn_twist(SurfaceKind::Torus11, s(0, 1), 1, Slope::infinity());
    CHECK(t != Slope::infinity());
    CHECK(intersection(SurfaceKind::Torus11, s(0, 1), t) == intersection(SurfaceKind::Torus11, s(0, 1), Slope::infinity()));

    CHECK(half_twist(Slope::infinity(), 2, s(1, 3)) == dehn_twist(SurfaceKind::Sphere04, Slope::infinity(), 1, s(1, 3)));
    CHECK(half_twist(s(2, 5), 0, s(1, 3)) == s(1, 3));
    CHECK(half_twist(Slope::infinity(), 3, s(1, 3)) == s(10, 3));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> power(-20, 20);
    for (int i = 0; i < 500; ++i) {
        const auto x = testing::random_slope(rng, 60), y = testing::random_slope(rng, 60);
        const auto n = power(rng);
        for (auto kind : {SurfaceKind::Torus11, SurfaceKind::Sphere04}) {
            CHECK(dehn_twist(kind, x, -n, dehn_twist(kind, x, n, y)) == y);
            CHECK(intersection(kind, x, dehn_twist(kind, x, n, y)) == intersection(kind, x, y));
        }
        CHECK(half_twist(x, 2 * n, y) == dehn_twist(SurfaceKind::Sphere04, x, n, y));
        CHECK(half_twist(x, -n, half_twist(x, n, y)) == y);
        CHECK(dehn_twist(SurfaceKind::Torus11, x, n, x) == x);
    }
}

TEST_CASE("pivot candidates") {
    const auto edge = pivot_candidates(Slope::infinity(), s(0, 1));
    CHECK(std::binary_search(edge.begin(), edge.end(), Slope::infinity()));
    CHECK(std::binary_search(edge.begin(), edge.end(), s(0, 1)));

    const auto half = pivot_candidates(Slope::infinity(), s(1, 2));
    for (const auto& v : {Slope::infinity(), s(0, 1), s(1, 1), s(1, 2)})
        CHECK(std::binary_search(half.begin(), half.end(), v));

    // The walk toward 3/8: floor and ceiling, then mediants 1/2, 1/3, 2/5, 3/8.
    const std::vector<Slope> expected{Slope::infinity(), s(0, 1), s(1, 1), s(1, 2), s(1, 3), s(2, 5), s(3, 8)};
    auto sorted = expected;
    std::sort(sorted.begin(), sorted.end());
    CHECK(pivot_candidates(Slope::infinity(), s(3, 8)) == sorted);

    CHECK_THROWS_AS(pivot_candidates(s(1, 2), s(1, 2)), PreconditionViolation);
}

TEST_CASE("distance and geodesic examples") {
    CHECK(distance(Slope::infinity(), Slope::infinity()) == 0);
    CHECK(distance(Slope::infinity(), s(1, 2)) == 2);
    CHECK(distance(Slope::infinity(), s(3, 8)) == 3);

    const auto g1 = geodesics(Slope::infinity(), s(0, 1));
    REQUIRE(g1.size() == 1);
    CHECK(to_string(g1[0]) == "1/0,0/1");

    const auto g2 = geodesics(Slope::infinity(), s(1, 2));
    REQUIRE(g2.size() == 2);
    CHECK(to_string(g2[0]) == "1/0,0/1,1/2");
    CHECK(to_string(g2[1]) == "1/0,1/1,1/2");

    for (const auto& g : geodesics(Slope::infinity(), s(3, 8))) {
        CHECK(g.length() == 3);
        for (std::size_t i = 0; i + 1 < g.vertices().size(); ++i) CHECK(adjacent(g[i], g[i + 1]));
    }

    CHECK(link_at_distance(Slope::infinity(), s(1, 2), 1) == std::vector<Slope>{s(0, 1), s(1, 1)});
    CHECK(link_at_distance(Slope::infinity(), Slope::infinity(), 1).empty());
    CHECK(link_at_distance(s(0, 1), s(3, 8), 1) == std::vector<Slope>{s(1, 3)});
}

TEST_CASE("geodesic certification") {
    CHECK_NOTHROW(Geodesic::certify({Slope::infinity(), s(0, 1), s(1, 2)}));
    CHECK_THROWS_AS(Geodesic::certify({Slope::infinity(), s(1, 2)}), PreconditionViolation);
    // adjacent steps but not shortest
    CHECK_THROWS_AS(Geodesic::certify({Slope::infinity(), s(0, 1), s(1, 1), s(1, 2)}), PreconditionViolation);
    CHECK_THROWS_AS(Geodesic::certify({}), PreconditionViolation);
    CHECK(Geodesic::certify({s(2, 3)}).length() == 0);
}

TEST_CASE("distance is a metric on a random corpus") {
    std::mt19937_64 rng(17);
    std::vector<Slope> pts;
    for (int i = 0; i < 60; ++i) pts.push_back(testing::random_slope(rng, 300));
    for (const auto& x : pts)
        for (const auto& y : pts) {
            CHECK(distance(x, y) == distance(y, x));
            CHECK((distance(x, y) == 0) == (x == y));
        }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            for (std::size_t k = 0; k < pts.size(); k += 7)
                CHECK(distance(pts[i], pts[j]) <= distance(pts[i], pts[k]) + distance(pts[k], pts[j]));
}

TEST_CASE("distance agrees with breadth-first search on the 64-box, denominators up to 34") {
    const FareyBox box(64);
    std::vector<std::size_t> endpoints;
    for (std::size_t i = 0; i < box.size(); ++i) {
        const auto v = box.slope(i);
        if (v.q() <= 34 && v.p() >= -34 && v.p() <= 34) endpoints.push_back(i);
    }
    std::size_t disagreements = 0, checked = 0;
    for (auto i : endpoints) {
        const auto d = box.bfs(i);
        for (auto j : endpoints) {
            if (j <= i) continue;
            ++checked;
            if (distance(box.slope(i), box.slope(j)) != d[j]) ++disagreements;
        }
    }
    CHECK(checked > 100000);
    CHECK(disagreements == 0);
}

TEST_CASE("geodesics agree with exhaustive path enumeration, denominators up to 21") {
    const FareyBox box(64);
    std::vector<std::size_t> endpoints;
    for (std::size_t i = 0; i < box.size(); ++i) {
        const auto v = box.slope(i);
        if (v.q() <= 21 && v.p() >= -21 && v.p() <= 21) endpoints.push_back(i);
    }
    std::size_t disagreements = 0, checked = 0;
    for (auto j : endpoints) {
        const auto from_j = box.bfs(j);
        for (auto i : endpoints) {
            if (i == j || from_j[i] > 4) continue;
            ++checked;
            if (as_paths(geodesics(box.slope(i), box.slope(j))) != box.all_shortest_paths(i, j, from_j)) ++disagreements;
        }
    }
    CHECK(checked > 100000);
    CHECK(disagreements == 0);
}

TEST_CASE("geodesic sets are Mobius equivariant") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const auto m = testing::random_mobius(rng);
        const auto x = testing::random_slope(rng, 30), y = testing::random_slope(rng, 30);
        if (x == y) continue;
        CHECK(distance(x, y) == distance(m.apply(x), m.apply(y)));
        std::set<std::vector<Slope>> moved, direct;
        for (const auto& g : geodesics(x, y)) {
            std::vector<Slope> path;
            for (const auto& v : g.vertices()) path.push_back(m.apply(v));
            moved.insert(path);
        }
        for (const auto& p : as_paths(geodesics(m.apply(x), m.apply(y)))) direct.insert(p);
        CHECK(moved == direct);
    }
}
