#include "ulfp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <istream>
#include <random>
#include <sstream>
#include <string>

#include "ulfp/errors.hpp"

namespace ulfp::graph {

FiniteGraph::FiniteGraph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges)
    : adjacency_(vertex_count) {
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw PreconditionViolation("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
        if (u == v) throw PreconditionViolation("self-loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
}

std::size_t FiniteGraph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& nbrs : adjacency_) twice += nbrs.size();
    return twice / 2;
}

std::vector<int> FiniteGraph::bfs(Vertex source) const {
    std::vector<int> dist(size(), -1);
    std::deque<Vertex> queue{source};
    dist.at(source) = 0;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto w : adjacency_[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::vector<std::size_t> FiniteGraph::components() const {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(size(), unset);
    std::size_t next = 0;
    for (Vertex s = 0; s < size(); ++s) {
        if (comp[s] != unset) continue;
        std::deque<Vertex> queue{s};
        comp[s] = next;
        while (!queue.empty()) {
            const auto v = queue.front();
            queue.pop_front();
            for (auto w : adjacency_[v])
                if (comp[w] == unset) {
                    comp[w] = next;
                    queue.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

std::size_t max_valency(const FiniteGraph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.size(); ++v) best = std::max(best, g.neighbors(v).size());
    return best;
}

namespace {

std::vector<Vertex> select_by_distance(const FiniteGraph& g, Vertex x, int r, bool exact) {
    if (r < 0) throw PreconditionViolation("radius must be nonnegative");
    const auto dist = g.bfs(x);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.size(); ++v)
        if (dist[v] >= 0 && (exact ? dist[v] == r : dist[v] <= r)) out.push_back(v);
    return out;
}

void check_lk(int l, int k) {
    if (l <= 0) throw PreconditionViolation("l must be positive");
    if (k <= 1) throw PreconditionViolation("k must exceed 1");
}

}  // namespace

std::vector<Vertex> ball(const FiniteGraph& g, Vertex x, int r) { return select_by_distance(g, x, r, false); }
std::vector<Vertex> circle(const FiniteGraph& g, Vertex x, int r) { return select_by_distance(g, x, r, true); }

BigInt ulf_bound(std::uint64_t valency, int l, int k) {
    check_lk(l, k);
    BigInt sum = 0, term = 1;
    for (int i = 0; i <= l; ++i) {
        sum += term;
        term *= valency;
    }
    return sum * (k - 1);
}

SeparationResult greedy_separated(const FiniteGraph& g, std::span<const Vertex> a, int l, int k) {
    check_lk(l, k);
    std::vector<Vertex> sorted(a.begin(), a.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) return BallCoverCertificate{{}, l};
    for (auto v : sorted)
        if (v >= g.size()) throw PreconditionViolation("vertex " + std::to_string(v) + " out of range");

    const auto comp = g.components();
    for (auto v : sorted)
        if (comp[v] != comp[sorted.front()])
            throw DisconnectedQuery("vertices " + std::to_string(sorted.front()) + " and " + std::to_string(v) +
                                    " lie in different components");

    // One BFS per kept vertex; the scan only queries distances from kept ones.
    std::vector<std::vector<int>> from;
    std::vector<std::size_t> from_index(sorted.size(), static_cast<std::size_t>(-1));
    auto dist = [&](std::size_t kept, std::size_t i) {
        if (from_index[kept] == static_cast<std::size_t>(-1)) {
            from_index[kept] = from.size();
            from.push_back(g.bfs(sorted[kept]));
        }
        return static_cast<std::int64_t>(from[from_index[kept]][sorted[i]]);
    };
    const auto pick = greedy_separated_by(sorted.size(), l, k, dist);

    std::vector<Vertex> chosen;
    for (auto i : pick.chosen) chosen.push_back(sorted[i]);
    if (pick.reached_k) return SeparatedWitness{std::move(chosen)};
    return BallCoverCertificate{std::move(chosen), l};
}

bool verify(const FiniteGraph& g, std::span<const Vertex> a, int l, int k, const SeparationResult& result) {
    if (const auto* w = std::get_if<SeparatedWitness>(&result)) {
        if (static_cast<int>(w->vertices.size()) != k) return false;
        for (std::size_t i = 0; i < w->vertices.size(); ++i) {
            const auto dist = g.bfs(w->vertices[i]);
            for (std::size_t j = i + 1; j < w->vertices.size(); ++j)
                if (dist[w->vertices[j]] >= 0 && dist[w->vertices[j]] <= l) return false;
        }
        return true;
    }
    const auto& cover = std::get<BallCoverCertificate>(result);
    if (static_cast<int>(cover.centers.size()) > k - 1) return false;
    std::vector<std::vector<int>> dists;
    for (auto c : cover.centers) dists.push_back(g.bfs(c));
    for (auto v : a) {
        const bool covered = std::any_of(dists.begin(), dists.end(), [&](const auto& d) {
            return d[v] >= 0 && d[v] <= cover.radius;
        });
        if (!covered) return false;
    }
    return true;
}

UlfpTrialReport check_ulfp_theorem(const FiniteGraph& g, std::size_t trials, int l, int k, std::uint64_t seed) {
    UlfpTrialReport report;
    report.trials = trials;
    report.bound = ulf_bound(max_valency(g), l, k);

    const auto comp = g.components();
    std::vector<std::vector<Vertex>> members;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (comp[v] >= members.size()) members.resize(comp[v] + 1);
        members[comp[v]].push_back(v);
    }
    std::vector<std::size_t> eligible;
    for (std::size_t c = 0; c < members.size(); ++c)
        if (BigInt(members[c].size()) > report.bound) eligible.push_back(c);

    if (eligible.empty()) {
        report.skipped = trials;
        return report;
    }
    const auto sample_size = static_cast<std::size_t>(report.bound) + 1;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uniform_int_distribution<std::size_t> pick_comp(0, eligible.size() - 1);
        auto pool = members[eligible[pick_comp(rng)]];
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(sample_size);
        const auto result = greedy_separated(g, pool, l, k);
        if (std::holds_alternative<SeparatedWitness>(result) && verify(g, pool, l, k, result))
            ++report.witnesses;
        else
            ++report.failures;
    }
    return report;
}

namespace {

std::string strip_comment(std::string line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    return line;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

FiniteGraph read_graph(std::istream& in) {
    std::string line;
    std::size_t n = 0, m = 0;
    bool have_header = false;
    std::vector<std::pair<Vertex, Vertex>> edges;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (blank(line)) continue;
        std::istringstream row(line);
        std::size_t a = 0, b = 0;
        std::string extra;
        if (!(row >> a >> b) || (row >> extra)) throw ParseError("malformed graph line '" + line + "'");
        if (!have_header) {
            n = a;
            m = b;
            have_header = true;
        } else {
            edges.emplace_back(a, b);
        }
    }
    if (!have_header) throw ParseError("graph file has no 'n m' header");
    if (edges.size() != m)
        throw ParseError("graph header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return FiniteGraph(n, edges);
}

std::vector<Vertex> read_vertex_set(std::istream& in) {
    std::string line;
    std::vector<Vertex> out;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (blank(line)) continue;
        std::istringstream row(line);
        Vertex v = 0;
        std::string extra;
        if (!(row >> v) || (row >> extra)) throw ParseError("malformed vertex line '" + line + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace ulfp::graph
