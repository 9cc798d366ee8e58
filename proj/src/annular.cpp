#include "ulfp/annular.hpp"

#include "ulfp/errors.hpp"

namespace ulfp {

std::int64_t TwistCoord::floor_over(std::int64_t s) const { return detail::floor_div(num, detail::mul(den, s)); }

std::string to_string(const TwistCoord& t) { return std::to_string(t.num) + "/" + std::to_string(t.den); }

bool projects(const Annulus& z, const Slope& y) { return y != z.core(); }

TwistCoord twist_coord(const Annulus& z, const Slope& y) {
    if (!projects(z, y)) throw EmptyProjection("curve " + to_string(y) + " is the core of the annulus");
    const Slope t = z.normalizer().apply(y);
    return {t.p(), t.q()};
}

std::int64_t annular_distance(SurfaceKind kind, const Annulus& z, const Slope& y, const Slope& w) {
    const auto ty = twist_coord(z, y);
    const auto tw = twist_coord(z, w);
    if (y == w) return 1;
    const auto s = twist_unit(kind);
    const auto gap = detail::sub(ty.floor_over(s), tw.floor_over(s));
    return (gap < 0 ? -gap : gap) + 2;
}

std::int64_t one_sided_distance(SurfaceKind kind, const Annulus& z, const Slope& from, const Slope& v) {
    if (!projects(z, v)) throw EmptyProjection("curve " + to_string(v) + " is the core of the annulus");
    if (!projects(z, from)) return 1;
    return annular_distance(kind, z, from, v);
}

}  // namespace ulfp
