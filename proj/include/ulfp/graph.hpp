#pragma once

// Uniform local finiteness on ordinary finite graphs: valency, balls and
// circles, the greedy separated-set / ball-cover dichotomy, and the
// counting threshold (k - 1) * sum_{i <= l} V^i.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "ulfp/bigint.hpp"

namespace ulfp::graph {

using Vertex = std::size_t;

/// Simple undirected graph with sorted neighbour lists. Duplicate edges are
/// merged; self-loops and out-of-range endpoints are rejected.
class FiniteGraph {
public:
    FiniteGraph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t size() const noexcept { return adjacency_.size(); }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t edge_count() const noexcept;

    /// Unreachable vertices get -1.
    std::vector<int> bfs(Vertex source) const;
    /// Component id per vertex, ids assigned in ascending order of first vertex.
    std::vector<std::size_t> components() const;

private:
    std::vector<std::vector<Vertex>> adjacency_;
};

std::size_t max_valency(const FiniteGraph& g);

/// N_r(x) and C_r(x), sorted.
std::vector<Vertex> ball(const FiniteGraph& g, Vertex x, int r);
std::vector<Vertex> circle(const FiniteGraph& g, Vertex x, int r);

/// (k - 1) * sum_{i=0}^{l} V^i.
BigInt ulf_bound(std::uint64_t valency, int l, int k);

struct SeparatedWitness {
    std::vector<Vertex> vertices;  // k vertices pairwise more than l apart
};

struct BallCoverCertificate {
    std::vector<Vertex> centers;  // at most k - 1
    int radius = 0;
};

using SeparationResult = std::variant<SeparatedWitness, BallCoverCertificate>;

/// Result of a greedy scan over abstract items: the chosen indices and
/// whether they reached size k.
struct GreedyPick {
    std::vector<std::size_t> chosen;
    bool reached_k = false;
};

/// Scans items 0..count-1 in order and keeps each one that is more than l
/// away from everything kept so far; stops once k are kept. A pick that
/// stops short is maximal, so every item lies within l of some kept item.
template <class DistanceFn>
GreedyPick greedy_separated_by(std::size_t count, std::int64_t l, int k, DistanceFn&& dist) {
    GreedyPick pick;
    for (std::size_t i = 0; i < count; ++i) {
        bool far = true;
        for (auto c : pick.chosen)
            if (dist(c, i) <= l) {
                far = false;
                break;
            }
        if (!far) continue;
        pick.chosen.push_back(i);
        if (static_cast<int>(pick.chosen.size()) == k) {
            pick.reached_k = true;
            break;
        }
    }
    return pick;
}

/// Greedy in ascending vertex order. Throws DisconnectedQuery if A spans
/// more than one component, PreconditionViolation unless l > 0 and k > 1.
SeparationResult greedy_separated(const FiniteGraph& g, std::span<const Vertex> a, int l, int k);

/// Re-verifies a result by direct BFS: witness vertices pairwise > l apart,
/// or every vertex of A within l of some center.
bool verify(const FiniteGraph& g, std::span<const Vertex> a, int l, int k, const SeparationResult& result);

struct UlfpTrialReport {
    std::size_t trials = 0;
    std::size_t witnesses = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;
    BigInt bound;
};

/// Draws `trials` random sets A of size ulf_bound + 1 inside a component
/// large enough to hold them and checks that the greedy scan yields a
/// verified witness. Trials with no such component are counted as skipped.
UlfpTrialReport check_ulfp_theorem(const FiniteGraph& g, std::size_t trials, int l, int k, std::uint64_t seed);

/// "n m" header then m lines "u v" (0-based).
FiniteGraph read_graph(std::istream& in);
/// One vertex id per line; '#' starts a comment.
std::vector<Vertex> read_vertex_set(std::istream& in);

}  // namespace ulfp::graph
