#pragma once

// Slices G(a, b) n N_delta(c) on the complexity-one curve graphs, the
// weak-tightness index of a geodesic, sampled radius slices, and the
// harness comparing slice sizes against the ULFP thresholds.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ulfp/bounds.hpp"
#include "ulfp/farey.hpp"

namespace ulfp {

struct SliceQuery {
    Slope a, b, c;
    int delta = 0;  // slice radius around c
    int r = 0;      // endpoint ball radius; 0 for plain slices
};

/// Vertices of all geodesics from a to b within delta of c, sorted.
std::vector<Slope> tight_slice(SurfaceKind kind, const Slope& a, const Slope& b, const Slope& c, int delta);

struct WeakTightReport {
    Geodesic geodesic;
    std::int64_t index = 0;
    struct Attainment {
        Slope vertex;
        Slope core;
    };
    std::optional<Attainment> attaining;
};

/// Smallest D for which g is D-weakly tight in the twist model, taken over
/// the candidate annuli of the vertex set of g. Requires endpoint distance > 2.
WeakTightReport weak_tight_index(SurfaceKind kind, const Geodesic& g);

/// Slice restricted to geodesics of weak-tightness index <= D.
std::vector<Slope> weak_tight_slice(SurfaceKind kind, const Slope& a, const Slope& b, const Slope& c, int delta,
                                    std::int64_t D);

/// Endpoint separation constant j = 3 delta + 2 for hyperbolicity delta.
constexpr int separation_constant(int hyperbolicity) { return 3 * hyperbolicity + 2; }

/// A certified subset of G(a, b; r) n N_delta(c). Never the exact set: the
/// balls N_r are infinite.
struct RadiusSliceSample {
    std::vector<Slope> subset;
    std::size_t samples = 0;
    bool hypothesis_holds = false;  // d(a, b) >= 2r + 2j + 1
};

/// Point of N_r(center): a random walk of at most r steps, each step moving
/// to a neighbour g^-1(n), |n| <= 8, where g normalizes the current vertex.
Slope random_ball_point(const Slope& center, int r, std::mt19937_64& rng);

RadiusSliceSample radius_slice_sample(SurfaceKind kind, const Slope& a, const Slope& b, int r, const Slope& c,
                                      int delta, std::size_t budget, std::uint64_t seed, int hyperbolicity);

struct SliceVerification {
    SliceQuery query;
    std::vector<Slope> slice;
    bool exact = true;  // false when the slice is a sampled lower bound
    bounds::BigBound bound = bounds::BigBound::exact(0);
    std::string bound_label;  // e.g. "N_S(2M,3)"
    long double margin_log10 = 0;
    std::map<std::string, bool> hypothesis_flags;
    bool passed = false;
};

struct SliceHarnessOptions {
    int M = 1;
    std::optional<std::int64_t> D;  // weak-tight variant when set
    int hyperbolicity = 1;
    std::size_t budget = 64;
    std::uint64_t seed = 0;
};

/// Computes the slice, fetches the matching threshold and compares.
/// Throws HypothesisViolation naming the failed hypothesis.
SliceVerification verify_slice_bounds(SurfaceKind kind, const SliceQuery& query, const SliceHarnessOptions& opts);

}  // namespace ulfp
