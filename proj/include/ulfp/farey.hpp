#pragma once

// Exact model of the curve graphs of the once-holed torus and the
// four-holed sphere: the Farey graph on Q u {1/0}.

#include <cstdint>
#include <span>
#include <vector>

#include "ulfp/slope.hpp"

namespace ulfp {

/// Geometric intersection number: |p_x q_y - q_x p_y|, doubled on the sphere.
std::int64_t intersection(SurfaceKind kind, const Slope& x, const Slope& y);

/// Farey adjacency (the same graph for both surface kinds).
bool adjacent(const Slope& x, const Slope& y);

/// The canonical map sending x to 1/0. For x = p/q with q > 0 it is
/// (v, -u; -q, p) where p v - q u = 1 and 0 <= v < q; identity for x = 1/0.
MobiusMap normalizer_to_infinity(const Slope& x);

/// T_x^n(y): conjugate of the shear t -> t + n * twist_unit(kind).
Slope dehn_twist(SurfaceKind kind, const Slope& x, std::int64_t n, const Slope& y);

/// H_x^n(y) on the four-holed sphere: conjugate of t -> t + n.
Slope half_twist(const Slope& x, std::int64_t n, const Slope& y);

/// Vertices of the Farey triangles crossed by the hyperbolic line from x to
/// y, sorted. Contains x and y. Requires x != y.
std::vector<Slope> pivot_candidates(const Slope& x, const Slope& y);

/// Curve-graph distance.
int distance(const Slope& x, const Slope& y);

/// A certified geodesic in the Farey graph.
class Geodesic {
public:
    /// Validates adjacency and that the length equals the endpoint distance.
    static Geodesic certify(std::vector<Slope> vertices);

    std::span<const Slope> vertices() const noexcept { return vertices_; }
    const Slope& front() const { return vertices_.front(); }
    const Slope& back() const { return vertices_.back(); }
    int length() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    const Slope& operator[](std::size_t i) const { return vertices_[i]; }

    friend bool operator==(const Geodesic&, const Geodesic&) = default;
    friend auto operator<=>(const Geodesic& a, const Geodesic& b) { return a.vertices_ <=> b.vertices_; }

private:
    explicit Geodesic(std::vector<Slope> v) : vertices_(std::move(v)) {}
    friend std::vector<Geodesic> geodesics(const Slope&, const Slope&);

    std::vector<Slope> vertices_;
};

/// All geodesics from x to y, in lexicographic order of vertex sequences.
std::vector<Geodesic> geodesics(const Slope& x, const Slope& y);

/// Neighbours v of x in the candidate closure of (x, target) with
/// distance(v, target) == d, sorted.
std::vector<Slope> link_at_distance(const Slope& x, const Slope& target, int d);

/// Union of the vertices of all geodesics from x to y, sorted.
std::vector<Slope> geodesic_vertices(const Slope& x, const Slope& y);

std::string to_string(const Geodesic& g);

}  // namespace ulfp
