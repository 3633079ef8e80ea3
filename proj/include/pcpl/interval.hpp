#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace pcpl {

// Closed real enclosure [lo, hi].  Every operation rounds outward, so an
// interval that contains the true value keeps containing it through any
// chain of arithmetic.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    constexpr Interval() = default;
    constexpr Interval(double point) : lo(point), hi(point) {}
    constexpr Interval(double l, double h) : lo(l), hi(h) {}

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
};

namespace detail {

inline double dn(double x, int ulps = 1) {
    for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
    return x;
}

inline double up(double x, int ulps = 1) {
    for (int i = 0; i < ulps; ++i) x = std::nextafter(x, std::numeric_limits<double>::infinity());
    return x;
}

}  // namespace detail

inline Interval pad(Interval a, int ulps) {
    return {detail::dn(a.lo, ulps), detail::up(a.hi, ulps)};
}

inline Interval operator+(Interval a, Interval b) {
    return {detail::dn(a.lo + b.lo), detail::up(a.hi + b.hi)};
}

inline Interval operator-(Interval a, Interval b) {
    return {detail::dn(a.lo - b.hi), detail::up(a.hi - b.lo)};
}

inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator*(Interval a, Interval b) {
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {detail::dn(std::min({p1, p2, p3, p4})), detail::up(std::max({p1, p2, p3, p4}))};
}

inline Interval operator/(Interval a, Interval b) {
    // callers never divide by an interval straddling zero
    double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    return {detail::dn(std::min({p1, p2, p3, p4})), detail::up(std::max({p1, p2, p3, p4}))};
}

inline Interval& operator+=(Interval& a, Interval b) { return a = a + b; }
inline Interval& operator-=(Interval& a, Interval b) { return a = a - b; }
inline Interval& operator*=(Interval& a, Interval b) { return a = a * b; }

inline Interval hull(Interval a, Interval b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// libm elementary functions are faithful to about 1 ulp on glibc; pad by 4
// to stay conservative.
inline Interval ilog(Interval a) {
    return pad({std::log(a.lo), std::log(a.hi)}, 4);
}

inline Interval ilog2(Interval a) {
    return pad({std::log2(a.lo), std::log2(a.hi)}, 4);
}

inline Interval ilog1p(Interval a) {
    return pad({std::log1p(a.lo), std::log1p(a.hi)}, 4);
}

inline Interval iexp(Interval a) {
    return pad({std::exp(a.lo), std::exp(a.hi)}, 4);
}

// x^y for x > 0, evaluated as exp(y ln x).
inline Interval ipow(Interval x, Interval y) {
    Interval r = iexp(ilog(x) * y);
    return pad(r, 4);
}

inline Interval ipow(Interval x, double y) { return ipow(x, Interval(y)); }

}  // namespace pcpl
