#ifndef ZSQM_DETAIL_DOUBLE_DOUBLE_HPP
#define ZSQM_DETAIL_DOUBLE_DOUBLE_HPP

#include <cmath>

namespace zsqm::detail {

// Compensated double-double arithmetic (hi + lo, |lo| <= ulp(hi)/2).
// Used for moment accumulations where the Hankel systems lose digits.
struct dd {
    double hi = 0.0, lo = 0.0;

    dd() = default;
    dd(double x) : hi(x), lo(0.0) {}
    dd(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

inline dd operator+(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    dd r = two_sum(s.hi, lo);
    return r;
}

inline dd operator-(dd a, dd b) { return a + dd(-b.hi, -b.lo); }

inline dd operator*(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - dd(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - dd(q2) * b;
    double q3 = r.hi / b.hi;
    dd q = two_sum(q1, q2);
    return q + dd(q3);
}

inline dd sqrt(dd a) {
    double q1 = std::sqrt(a.hi);
    if (q1 == 0.0) return dd(0.0);
    dd r = a - two_prod(q1, q1);
    double q2 = r.hi / (2.0 * q1);
    return two_sum(q1, q2);
}

} // namespace zsqm::detail

#endif
