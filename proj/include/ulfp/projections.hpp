#pragma once

// Property P(l, k, Z) over the subsurfaces of a complexity-one surface, the
// constructive ULFP certificate, the first-step construction used in the
// distance induction, and an empirical audit of bounded geodesic image.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "ulfp/annular.hpp"
#include "ulfp/farey.hpp"

namespace ulfp {

/// Either the whole surface or an annulus R(core).
class SubsurfaceRef {
public:
    static SubsurfaceRef whole() { return SubsurfaceRef{}; }
    static SubsurfaceRef annulus(const Slope& core) { return SubsurfaceRef{Annulus{core}}; }

    bool is_whole() const noexcept { return !annulus_.has_value(); }
    /// Throws std::bad_optional_access for the whole surface.
    const Annulus& annulus() const { return annulus_.value(); }

    /// Whole first, then annuli in slope order of their cores.
    friend bool operator==(const SubsurfaceRef&, const SubsurfaceRef&) = default;
    friend std::strong_ordering operator<=>(const SubsurfaceRef& a, const SubsurfaceRef& b) {
        if (a.is_whole() || b.is_whole()) return b.is_whole() <=> a.is_whole();
        return a.annulus().core() <=> b.annulus().core();
    }

private:
    SubsurfaceRef() = default;
    explicit SubsurfaceRef(Annulus a) : annulus_(std::move(a)) {}
    std::optional<Annulus> annulus_;
};

std::string to_string(const SubsurfaceRef& z);

/// Every curve projects to the whole surface; only the core misses an annulus.
bool projects(const SubsurfaceRef& z, const Slope& y);

/// Whole: curve-graph distance. Annulus: model distance (EmptyProjection on the core).
std::int64_t proj_distance(SurfaceKind kind, const SubsurfaceRef& z, const Slope& y, const Slope& w);

/// Whole plus R(v) for each vertex v of each geodesic between two members
/// of A, ordered. Requires |A| >= 2.
std::vector<SubsurfaceRef> candidate_subsurfaces(SurfaceKind kind, std::span<const Slope> a);

struct Witness {
    std::vector<Slope> slopes;  // k curves pairwise more than l apart in `subsurface`
    SubsurfaceRef subsurface = SubsurfaceRef::whole();
};

struct PropertyPReport {
    bool holds = true;
    std::optional<Witness> witness;
    std::size_t checked_subsurfaces = 0;
};

/// Largest k accepted by the exact clique search.
inline constexpr int max_witness_size = 8;

/// Decides P(l, k, Z) for A: no k members pairwise more than l apart in Z.
/// Members not projecting to Z are skipped. Requires l > 0, 1 < k <= 8.
PropertyPReport check_P(SurfaceKind kind, std::span<const Slope> a, std::int64_t l, int k, const SubsurfaceRef& z);

/// P(l, k, Z) over all candidate subsurfaces; stops at the first witness.
PropertyPReport check_P_all(SurfaceKind kind, std::span<const Slope> a, std::int64_t l, int k);

struct CoverEntry {
    SubsurfaceRef subsurface;
    std::vector<Slope> centers;  // at most k - 1
};

struct Covered {
    std::int64_t radius = 0;
    std::vector<CoverEntry> entries;
};

using UlfpCertificate = std::variant<Witness, Covered>;

/// Witness when P(l, k) fails, otherwise per-subsurface greedy ball covers.
UlfpCertificate ulfp_witness(SurfaceKind kind, std::span<const Slope> a, std::int64_t l, int k);

/// Re-checks a certificate by direct recomputation of projected distances.
bool verify_certificate(SurfaceKind kind, std::span<const Slope> a, std::int64_t l, int k, const UlfpCertificate& cert);

/// For each b in B (all at distance i > 1 from x) the second vertex of the
/// lexicographically least geodesic from x to b. Sorted, deduplicated.
std::vector<Slope> lemma_co_construct(SurfaceKind kind, const Slope& x, std::span<const Slope> b, int i);

/// Source-to-first-step map behind lemma_co_construct.
std::vector<std::pair<Slope, Slope>> lemma_co_pairs(SurfaceKind kind, const Slope& x, std::span<const Slope> b, int i);

struct BgitAttainment {
    Slope x, y;
    Geodesic geodesic;
    Slope vertex;
    Slope core;
};

struct BgitAudit {
    std::int64_t value = 0;
    std::optional<BgitAttainment> attained;
    std::size_t pairs_checked = 0;
    std::size_t pairs_skipped = 0;  // endpoint distance <= 2
};

/// max over pairs, geodesics, interior vertices v and candidate annuli Z with
/// pi_Z(v) nonempty of min(d^_Z(x, v), d^_Z(v, y)).
BgitAudit bgit_audit(SurfaceKind kind, std::span<const std::pair<Slope, Slope>> pairs);

}  // namespace ulfp
