#include "ulfp/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <gmp.h>

#include "ulfp/errors.hpp"

namespace ulfp::bounds {

namespace {

constexpr long double log10_two = 0.301029995663981195213738894724493027L;

// Pushes a computed logarithm upward past accumulated rounding error.
long double round_up(long double x) { return x + std::fabs(x) * 1e-15L + 1e-15L; }

long double log10_int(long long v) { return std::log10(static_cast<long double>(v)); }

// Complexity-one base: (factor * (l + 2M + 2) * k)^(l+1).
BigInt exact_base(int factor, int l, int k, int M) {
    const BigInt base = BigInt(factor) * (l + 2 * M + 2) * k;
    return boost::multiprecision::pow(base, static_cast<unsigned>(l + 1));
}

long double log10_base(int factor, int l, int k, int M) {
    const long long base = static_cast<long long>(factor) * (l + 2LL * M + 2) * k;
    return round_up((l + 1) * log10_int(base));
}

}  // namespace

int complexity(const Surface& s) {
    if (s.genus < 0 || s.boundary < 0) throw PreconditionViolation("genus and boundary count must be nonnegative");
    const int xi = 3 * s.genus + s.boundary - 3;
    if (xi < 1) throw PreconditionViolation("surface " + to_string(s) + " has complexity " + std::to_string(xi) + " < 1");
    return xi;
}

Surface surface_for(SurfaceKind kind) {
    return kind == SurfaceKind::Torus11 ? Surface{1, 1} : Surface{0, 4};
}

std::string to_string(const Surface& s) { return "S_{" + std::to_string(s.genus) + "," + std::to_string(s.boundary) + "}"; }

void BoundParams::validate() const {
    if (l <= 0) throw PreconditionViolation("l must be positive");
    if (k <= 1) throw PreconditionViolation("k must exceed 1");
    if (M <= 0) throw PreconditionViolation("M must be positive");
}

BigBound BigBound::exact(BigInt value) {
    if (value < 0) throw std::domain_error("bounds are nonnegative");
    BigBound b;
    b.log10_ = value == 0 ? -std::numeric_limits<long double>::infinity() : round_up(log10_of(value));
    b.exact_ = std::move(value);
    return b;
}

BigBound BigBound::log10(long double upper) {
    BigBound b;
    b.log10_ = upper;
    return b;
}

const BigInt& BigBound::value() const {
    if (!exact_) throw std::logic_error("bound is only available as a log10 estimate");
    return *exact_;
}

std::string BigBound::to_string() const {
    if (exact_) return exact_->str();
    const long double scaled = std::ceil(log10_ * 1e9L);
    std::ostringstream os;
    os << "10^" << std::fixed << std::setprecision(9) << scaled / 1e9L;
    return os.str();
}

int compare(const BigBound& a, const BigBound& b) {
    if (a.mode() == Mode::Exact && b.mode() == Mode::Exact) {
        const int c = a.value().compare(b.value());
        return (c > 0) - (c < 0);
    }
    return (a.log10_upper() > b.log10_upper()) - (a.log10_upper() < b.log10_upper());
}

long double log10_of(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log10 of a nonpositive integer");
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, v.backend().data());
    return std::log10(static_cast<long double>(mantissa)) + static_cast<long double>(exponent) * log10_two;
}

long double BoundTable::log10_at(int level, int l, int k, int M) {
    const Key key{level, l, k, M};
    {
        std::shared_lock lock(mutex_);
        if (auto it = log10_memo_.find(key); it != log10_memo_.end()) return it->second;
    }
    long double value;
    if (level == -1)
        value = log10_base(1, l, k, M);
    else if (level == 1)
        value = std::max(log10_base(1, l, k, M), log10_base(2, l, k, M));
    else
        value = round_up((l + 1) * (log10_two + log10_max_upto(level - 1, l + 2 * M, k, M)));
    std::unique_lock lock(mutex_);
    return log10_memo_.emplace(key, value).first->second;
}

long double BoundTable::log10_max_upto(int c, int l, int k, int M) {
    long double best = log10_at(1, l, k, M);
    for (int level = 2; level <= c; ++level) best = std::max(best, log10_at(level, l, k, M));
    return best;
}

BigInt BoundTable::exact_at(int level, int l, int k, int M) {
    const Key key{level, l, k, M};
    {
        std::shared_lock lock(mutex_);
        if (auto it = exact_memo_.find(key); it != exact_memo_.end()) return it->second;
    }
    BigInt value;
    if (level == -1)
        value = exact_base(1, l, k, M);
    else if (level == 1)
        value = std::max(exact_base(1, l, k, M), exact_base(2, l, k, M));
    else
        value = boost::multiprecision::pow(BigInt(2) * exact_max_upto(level - 1, l + 2 * M, k, M),
                                           static_cast<unsigned>(l + 1));
    std::unique_lock lock(mutex_);
    return exact_memo_.emplace(key, std::move(value)).first->second;
}

BigInt BoundTable::exact_max_upto(int c, int l, int k, int M) {
    BigInt best = exact_at(1, l, k, M);
    for (int level = 2; level <= c; ++level) {
        BigInt v = exact_at(level, l, k, M);
        if (v > best) best = std::move(v);
    }
    return best;
}

BigBound BoundTable::n_bound(const Surface& s, const BoundParams& p, Mode mode) {
    p.validate();
    const int xi = complexity(s);
    // At complexity one only the torus and the sphere exist.
    const int level = xi >= 2 ? xi : (s.genus == 1 ? -1 : 1);
    const long double upper = log10_at(level, p.l, p.k, p.M);
    if (mode == Mode::Log10 || std::floor(upper) + 1 > static_cast<long double>(digit_cap_))
        return BigBound::log10(upper);
    return BigBound::exact(exact_at(level, p.l, p.k, p.M));
}

BoundTable& default_table() {
    static BoundTable table;
    return table;
}

BigBound n_bound(const Surface& s, const BoundParams& p, Mode mode) { return default_table().n_bound(s, p, mode); }

std::pair<BigBound, BigBound> slice_bound_tight(const Surface& s, int M, Mode mode, BoundTable& table) {
    return {table.n_bound(s, {2 * M, 3, M}, mode), table.n_bound(s, {4 * M, 3, M}, mode)};
}

std::pair<BigBound, BigBound> slice_bound_weak(const Surface& s, int D, int M, Mode mode, BoundTable& table) {
    if (D < M) throw PreconditionViolation("weak-tight slice bound requires D >= M");
    return {table.n_bound(s, {2 * D, 3, M}, mode), table.n_bound(s, {2 * (D + M), 3, M}, mode)};
}

BigBound growth_upper(const Surface& s, const BoundParams& p) {
    p.validate();
    const long double xi = complexity(s);
    const long double L = p.l + 2.0L * p.M;
    const long double outer = std::pow(2 * xi * L, xi);
    const long double inner = (xi * L + 1) * std::log10(2 * (xi * L + 2 * p.M + 2) * p.k);
    return BigBound::log10(round_up(outer * inner));
}

}  // namespace ulfp::bounds
