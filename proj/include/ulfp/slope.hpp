#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ulfp {

/// The two complexity-one surfaces whose curve graphs are the Farey graph.
enum class SurfaceKind { Torus11, Sphere04 };

/// Curves meet once on the torus and twice on the sphere; a full twist
/// shifts the normalized slope by this amount.
constexpr std::int64_t twist_unit(SurfaceKind kind) noexcept {
    return kind == SurfaceKind::Torus11 ? 1 : 2;
}

/// A vertex of the Farey graph: a reduced fraction p/q with q >= 0, or 1/0.
///
/// Ordering is by denominator, then numerator, so 1/0 sorts first and
/// 0/1 < 1/1 < -1/2 < 1/2. All containers of slopes in this library use it.
class Slope {
public:
    constexpr Slope() noexcept = default;

    /// Reduces and normalizes; throws PreconditionViolation on (0, 0).
    Slope(std::int64_t p, std::int64_t q);

    static constexpr Slope infinity() noexcept { return Slope{}; }
    static Slope integer(std::int64_t n) { return Slope{n, 1}; }

    constexpr std::int64_t p() const noexcept { return p_; }
    constexpr std::int64_t q() const noexcept { return q_; }
    constexpr bool is_infinity() const noexcept { return q_ == 0; }

    friend constexpr bool operator==(const Slope&, const Slope&) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(const Slope& a, const Slope& b) noexcept {
        if (auto c = a.q_ <=> b.q_; c != 0) return c;
        return a.p_ <=> b.p_;
    }

private:
    std::int64_t p_ = 1;
    std::int64_t q_ = 0;
};

/// canonical(p, q): reduced representative; rejects (0, 0).
inline Slope canonical(std::int64_t p, std::int64_t q) { return Slope{p, q}; }

std::string to_string(const Slope& s);
std::ostream& operator<<(std::ostream& os, const Slope& s);

/// Parses "p/q" (optional surrounding whitespace). "1/0" is infinity; a
/// bare integer "n" is accepted as n/1.
Slope parse_slope(std::string_view text);

/// 2x2 integer matrix of determinant +1 or -1 acting on slopes by
/// p/q -> (a p + b q)/(c p + d q).
class MobiusMap {
public:
    MobiusMap() noexcept = default;
    /// Throws PreconditionViolation unless ad - bc is +1 or -1.
    MobiusMap(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    static MobiusMap identity() noexcept { return {}; }

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t d() const noexcept { return d_; }
    std::int64_t determinant() const noexcept { return a_ * d_ - b_ * c_; }

    MobiusMap inverse() const;
    Slope apply(const Slope& x) const;

    friend MobiusMap operator*(const MobiusMap& lhs, const MobiusMap& rhs);
    friend bool operator==(const MobiusMap&, const MobiusMap&) noexcept = default;

private:
    std::int64_t a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

inline Slope apply(const MobiusMap& m, const Slope& x) { return m.apply(x); }

std::ostream& operator<<(std::ostream& os, const MobiusMap& m);

namespace detail {
// Overflow-checked arithmetic; throws std::overflow_error.
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t floor_div(std::int64_t a, std::int64_t b);
}  // namespace detail

}  // namespace ulfp

template <>
struct std::hash<ulfp::Slope> {
    std::size_t operator()(const ulfp::Slope& s) const noexcept {
        auto h = static_cast<std::uint64_t>(s.p()) * 0x9E3779B97F4A7C15ULL;
        return static_cast<std::size_t>(h ^ (static_cast<std::uint64_t>(s.q()) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2)));
    }
};
