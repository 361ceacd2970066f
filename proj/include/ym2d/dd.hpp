#ifndef YM2D_DD_HPP_
#define YM2D_DD_HPP_

#include <cmath>

namespace ym2d {

/// Double-double value (~106-bit mantissa).  Used to turn exact big-integer
/// numerator/denominator pairs into correctly rounded doubles: each side is
/// read off to ~31 digits and divided here, so the only rounding in a moment
/// evaluation is the final one.
struct Dd {
    double hi = 0.0;
    double lo = 0.0;

    Dd() = default;
    Dd(double h) : hi(h), lo(0.0) {}
    Dd(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

namespace dd_detail {
inline Dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}
inline Dd two_sum(double a, double b) {
    double s = a + b;
    double v = s - a;
    return {s, (a - (s - v)) + (b - v)};
}
inline Dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}
}  // namespace dd_detail

inline Dd dd_add(Dd a, Dd b) {
    Dd s = dd_detail::two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return dd_detail::quick_two_sum(s.hi, lo);
}

inline Dd dd_neg(Dd a) { return {-a.hi, -a.lo}; }

inline Dd dd_sub(Dd a, Dd b) { return dd_add(a, dd_neg(b)); }

inline Dd dd_mul(Dd a, Dd b) {
    Dd p = dd_detail::two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return dd_detail::quick_two_sum(p.hi, lo);
}

inline Dd dd_mul(Dd a, double b) { return dd_mul(a, Dd(b)); }

inline Dd dd_div(Dd a, Dd b) {
    double q1 = a.hi / b.hi;
    Dd r = dd_sub(a, dd_mul(b, q1));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    double q3 = r.hi / b.hi;
    Dd q = dd_detail::quick_two_sum(q1, q2);
    return dd_add(q, Dd(q3));
}

}  // namespace ym2d

#endif  // YM2D_DD_HPP_
