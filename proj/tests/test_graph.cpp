#include <doctest.h>

#include <numeric>
#include <sstream>

#include "support/test_support.hpp"
#include "ulfp/errors.hpp"
#include "ulfp/graph.hpp"

using namespace ulfp;
using namespace ulfp::graph;
using ulfp::testing::path_graph;

namespace {

FiniteGraph star(std::size_t leaves) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 1; u <= leaves; ++u) edges.emplace_back(0, u);
    return FiniteGraph(leaves + 1, edges);
}

FiniteGraph complete(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return FiniteGraph(n, edges);
}

std::vector<Vertex> iota(std::size_t n) {
    std::vector<Vertex> out(n);
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
}

}  // namespace

TEST_CASE("construction") {
    const std::pair<Vertex, Vertex> dup[] = {{0, 1}, {1, 0}, {1, 2}};
    CHECK(FiniteGraph(3, dup).edge_count() == 2);
    const std::pair<Vertex, Vertex> loop[] = {{1, 1}};
    CHECK_THROWS_AS(FiniteGraph(3, loop), PreconditionViolation);
    const std::pair<Vertex, Vertex> out_of_range[] = {{0, 3}};
    CHECK_THROWS_AS(FiniteGraph(3, out_of_range), PreconditionViolation);
}

TEST_CASE("valency, balls and circles") {
    CHECK(max_valency(path_graph(5)) == 2);
    CHECK(max_valency(FiniteGraph(1, {})) == 0);
    CHECK(max_valency(star(7)) == 7);

    const auto p = path_graph(4);
    CHECK(ball(p, 2, 0) == std::vector<Vertex>{2});
    CHECK(circle(p, 2, 0) == std::vector<Vertex>{2});
    CHECK(ball(p, 1, 1) == std::vector<Vertex>{0, 1, 2});
    CHECK(circle(p, 1, 2) == std::vector<Vertex>{3});
    CHECK(circle(p, 0, 9).empty());
}

TEST_CASE("counting threshold") {
    CHECK(ulf_bound(2, 2, 3) == 14);
    CHECK(ulf_bound(0, 4, 5) == 4);
    CHECK(ulf_bound(2, 1, 2) == 3);
    CHECK(ulf_bound(10, 20, 2) == BigInt("111111111111111111111"));
}

TEST_CASE("greedy examples") {
    const auto p = path_graph(13);
    const auto all = iota(13);
    const auto w = greedy_separated(p, all, 2, 3);
    REQUIRE(std::holds_alternative<SeparatedWitness>(w));
    CHECK(std::get<SeparatedWitness>(w).vertices == std::vector<Vertex>{0, 3, 6});
    CHECK(verify(p, all, 2, 3, w));

    const std::vector<Vertex> near{0, 1, 2};
    const auto c = greedy_separated(p, near, 2, 2);
    REQUIRE(std::holds_alternative<BallCoverCertificate>(c));
    CHECK(std::get<BallCoverCertificate>(c).centers == std::vector<Vertex>{0});
    CHECK(std::get<BallCoverCertificate>(c).radius == 2);
    CHECK(verify(p, near, 2, 2, c));

    const auto e = greedy_separated(p, std::vector<Vertex>{}, 2, 2);
    REQUIRE(std::holds_alternative<BallCoverCertificate>(e));
    CHECK(std::get<BallCoverCertificate>(e).centers.empty());

    CHECK_FALSE(verify(p, all, 2, 3, SeparatedWitness{{0, 2, 6}}));
    CHECK_FALSE(verify(p, all, 2, 3, BallCoverCertificate{{0, 6}, 2}));
}

TEST_CASE("greedy preconditions") {
    const std::pair<Vertex, Vertex> two_parts[] = {{0, 1}, {2, 3}};
    const FiniteGraph g(4, two_parts);
    CHECK_THROWS_AS(greedy_separated(g, std::vector<Vertex>{0, 3}, 1, 2), DisconnectedQuery);
    CHECK_THROWS_AS(greedy_separated(g, std::vector<Vertex>{0, 1}, 0, 2), PreconditionViolation);
    CHECK_THROWS_AS(greedy_separated(g, std::vector<Vertex>{0, 1}, 1, 1), PreconditionViolation);
}

TEST_CASE("path graphs: more than (l + 2) k vertices always separate") {
    std::mt19937_64 rng(67);
    const auto p = path_graph(300);
    for (int l = 1; l <= 6; ++l)
        for (int k = 2; k <= 6; ++k)
            for (int t = 0; t < 20; ++t) {
                const auto a = testing::sample_without_replacement(rng, iota(300), static_cast<std::size_t>((l + 2) * k + 1));
                const auto r = greedy_separated(p, a, l, k);
                CHECK(std::holds_alternative<SeparatedWitness>(r));
                CHECK(verify(p, a, l, k, r));
            }
}

TEST_CASE("circle growth is bounded by the valency") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 30; ++t) {
        const auto g = testing::random_bounded_graph(rng, 120, 2 + t % 4, 60);
        const auto v = max_valency(g);
        for (Vertex x = 0; x < g.size(); x += 7)
            for (int i = 0; i < 6; ++i) CHECK(circle(g, x, i + 1).size() <= v * circle(g, x, i).size());
    }
}

TEST_CASE("random trials on bounded-valency graphs") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 20; ++t) {
        const auto g = testing::random_bounded_graph(rng, 400, 3, 100);
        const auto rep = check_ulfp_theorem(g, 10, 2, 3, 1000 + t);
        CHECK(rep.trials == 10);
        CHECK(rep.failures == 0);
        CHECK(rep.witnesses + rep.skipped == 10);
        CHECK(rep.bound == ulf_bound(max_valency(g), 2, 3));
    }
}

TEST_CASE("trial examples") {
    const auto p = check_ulfp_theorem(path_graph(40), 25, 1, 2, 5);
    CHECK(p.bound == 3);
    CHECK(p.witnesses == 25);
    const auto k5 = check_ulfp_theorem(complete(5), 10, 1, 2, 5);
    CHECK(k5.skipped == 10);
    CHECK(k5.failures == 0);
}

TEST_CASE("graph file formats") {
    std::istringstream ok("4 3\n0 1\n1 2\n2 3\n");
    CHECK(read_graph(ok).edge_count() == 3);
    std::istringstream short_list("4 3\n0 1\n");
    CHECK_THROWS_AS(read_graph(short_list), ParseError);
    std::istringstream junk("x y\n");
    CHECK_THROWS_AS(read_graph(junk), ParseError);
    std::istringstream set("# chosen\n0\n3\n");
    CHECK(read_vertex_set(set) == std::vector<Vertex>{0, 3});
}
