#pragma once

// Twist-coordinate model of annular subsurface projections on the
// complexity-one surfaces.
//
// For an annulus Z with core x, the projection of y != x is read off as the
// rational t = g(y), where g is the canonical normalizer sending x to 1/0.
// The model distance between two distinct curves is
//     |floor(t_y / s) - floor(t_z / s)| + 2,   s = twist_unit(kind),
// and 1 for a curve against itself. On the torus this reproduces
// d_Z(y, T_x^n(y)) = |n| + 2 exactly.

#include <cstdint>
#include <string>

#include "ulfp/farey.hpp"

namespace ulfp {

/// Proper annular subsurface R(core).
class Annulus {
public:
    explicit Annulus(const Slope& core) : core_(core), normalizer_(normalizer_to_infinity(core)) {}

    const Slope& core() const noexcept { return core_; }
    const MobiusMap& normalizer() const noexcept { return normalizer_; }

    friend bool operator==(const Annulus& a, const Annulus& b) noexcept { return a.core_ == b.core_; }
    friend auto operator<=>(const Annulus& a, const Annulus& b) noexcept { return a.core_ <=> b.core_; }

private:
    Slope core_;
    MobiusMap normalizer_;
};

/// Exact rational twist coordinate num/den with den > 0.
struct TwistCoord {
    std::int64_t num = 0;
    std::int64_t den = 1;

    /// floor(value / s) for s > 0.
    std::int64_t floor_over(std::int64_t s) const;

    friend bool operator==(const TwistCoord&, const TwistCoord&) = default;
};

std::string to_string(const TwistCoord& t);

/// pi_Z(y) is nonempty iff y meets the core, i.e. y != core.
bool projects(const Annulus& z, const Slope& y);

/// Throws EmptyProjection when y is the core.
TwistCoord twist_coord(const Annulus& z, const Slope& y);

/// Model distance d^_Z(y, z); throws EmptyProjection if either is the core.
std::int64_t annular_distance(SurfaceKind kind, const Annulus& z, const Slope& y, const Slope& w);

/// d^_Z(from, v) where `from` may fail to project: then only pi_Z(v)
/// contributes and the diameter of a single projection (1) is returned.
/// `v` must project.
std::int64_t one_sided_distance(SurfaceKind kind, const Annulus& z, const Slope& from, const Slope& v);

}  // namespace ulfp
