#pragma once

// Exact evaluation of the ULFP threshold N_S(l, k) by recursion on the
// complexity xi(S) = 3g + n - 3:
//
//   once-holed torus   ((l + 2M + 2) k)^(l+1)
//   four-holed sphere  (2 (l + 2M + 2) k)^(l+1)
//   xi >= 2            (2 N'(xi - 1; l + 2M, k))^(l+1)
//
// where N'(c; l, k) is the largest threshold over surfaces of complexity at
// most c. The xi >= 2 formula does not depend on (g, n), so N' depends on c
// alone and the complexity-one maximum is the sphere value.

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <utility>

#include "ulfp/bigint.hpp"
#include "ulfp/slope.hpp"

namespace ulfp::bounds {

struct Surface {
    int genus = 0;
    int boundary = 0;

    friend bool operator==(const Surface&, const Surface&) = default;
};

/// 3g + n - 3; throws PreconditionViolation for negative g, n or xi < 1.
int complexity(const Surface& s);

/// S_{1,1} for the torus kind, S_{0,4} for the sphere kind.
Surface surface_for(SurfaceKind kind);

std::string to_string(const Surface& s);

struct BoundParams {
    int l = 1;
    int k = 2;
    int M = 1;

    /// Throws PreconditionViolation unless l > 0, k > 1, M > 0.
    void validate() const;
};

enum class Mode { Exact, Log10 };

/// A threshold value: either the exact integer, or an upper bound on its
/// base-10 logarithm when the integer is too large to materialize.
class BigBound {
public:
    static BigBound exact(BigInt value);
    static BigBound log10(long double upper);

    Mode mode() const noexcept { return exact_ ? Mode::Exact : Mode::Log10; }
    /// Throws std::logic_error in Log10 mode.
    const BigInt& value() const;
    /// Upper bound on log10 of the value (tight to ~1e-12 relative).
    long double log10_upper() const noexcept { return log10_; }

    /// Decimal digits (Exact) or "10^x" with x rounded up to 9 places.
    std::string to_string() const;

private:
    std::optional<BigInt> exact_;
    long double log10_ = 0;
};

/// -1, 0, 1; exact when both sides are exact, else by log10 upper bounds.
int compare(const BigBound& a, const BigBound& b);

/// log10 of a positive integer (double-mantissa accuracy).
long double log10_of(const BigInt& v);

inline constexpr std::size_t default_digit_cap = 1'000'000;

/// Memoized evaluator. Reads share a lock; insertions take it exclusively.
/// Values are deterministic, so evaluation order never changes results.
class BoundTable {
public:
    explicit BoundTable(std::size_t digit_cap = default_digit_cap) : digit_cap_(digit_cap) {}

    std::size_t digit_cap() const noexcept { return digit_cap_; }

    /// Exact mode falls back to Log10 when the value would exceed the digit cap.
    BigBound n_bound(const Surface& s, const BoundParams& p, Mode mode = Mode::Exact);

private:
    // level: -1 torus base, 1 complexity-one maximum (sphere), c >= 2 recursive.
    using Key = std::tuple<int, int, int, int>;

    BigInt exact_at(int level, int l, int k, int M);
    long double log10_at(int level, int l, int k, int M);
    BigInt exact_max_upto(int c, int l, int k, int M);
    long double log10_max_upto(int c, int l, int k, int M);

    std::size_t digit_cap_;
    std::shared_mutex mutex_;
    std::map<Key, BigInt> exact_memo_;
    std::map<Key, long double> log10_memo_;
};

/// Process-wide table with the default digit cap.
BoundTable& default_table();

BigBound n_bound(const Surface& s, const BoundParams& p, Mode mode = Mode::Exact);

/// (N_S(2M, 3), N_S(4M, 3)).
std::pair<BigBound, BigBound> slice_bound_tight(const Surface& s, int M, Mode mode = Mode::Exact,
                                                BoundTable& table = default_table());

/// (N_S(2D, 3), N_S(2(D + M), 3)); throws PreconditionViolation when D < M.
std::pair<BigBound, BigBound> slice_bound_weak(const Surface& s, int D, int M, Mode mode = Mode::Exact,
                                               BoundTable& table = default_table());

/// Upper bound on log10 of the closed-form envelope
///   N_{S_{0,4}}(xi L, k)^((2 xi L)^xi),   L = l + 2M.
BigBound growth_upper(const Surface& s, const BoundParams& p);

}  // namespace ulfp::bounds
