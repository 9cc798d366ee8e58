#include "ulfp/slope.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "ulfp/errors.hpp"

namespace ulfp {

namespace detail {

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("slope arithmetic overflow");
    return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("slope arithmetic overflow");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("slope arithmetic overflow");
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace detail

Slope::Slope(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw PreconditionViolation("slope 0/0 is not a curve");
    if (q == 0) return;  // every p/0 is the slope 1/0
    if (p == INT64_MIN || q == INT64_MIN) throw std::overflow_error("slope component out of range");
    const std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    p_ = p;
    q_ = q;
}

std::string to_string(const Slope& s) { return std::to_string(s.p()) + "/" + std::to_string(s.q()); }

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.p() << '/' << s.q(); }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("malformed slope '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Slope parse_slope(std::string_view text) {
    const auto t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) return Slope{parse_int(t, text), 1};
    const auto p = parse_int(trim(t.substr(0, slash)), text);
    const auto q = parse_int(trim(t.substr(slash + 1)), text);
    if (p == 0 && q == 0) throw ParseError("slope 0/0 is not a curve");
    return Slope{p, q};
}

MobiusMap::MobiusMap(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : a_(a), b_(b), c_(c), d_(d) {
    const auto det = detail::sub(detail::mul(a, d), detail::mul(b, c));
    if (det != 1 && det != -1) throw PreconditionViolation("Mobius map must have determinant +1 or -1");
}

MobiusMap MobiusMap::inverse() const {
    const auto e = determinant();
    return {e * d_, -e * b_, -e * c_, e * a_};
}

Slope MobiusMap::apply(const Slope& x) const {
    using detail::add, detail::mul;
    return Slope{add(mul(a_, x.p()), mul(b_, x.q())), add(mul(c_, x.p()), mul(d_, x.q()))};
}

MobiusMap operator*(const MobiusMap& l, const MobiusMap& r) {
    using detail::add, detail::mul;
    return {add(mul(l.a_, r.a_), mul(l.b_, r.c_)), add(mul(l.a_, r.b_), mul(l.b_, r.d_)),
            add(mul(l.c_, r.a_), mul(l.d_, r.c_)), add(mul(l.c_, r.b_), mul(l.d_, r.d_))};
}

std::ostream& operator<<(std::ostream& os, const MobiusMap& m) {
    return os << '(' << m.a() << ',' << m.b() << ';' << m.c() << ',' << m.d() << ')';
}

}  // namespace ulfp
