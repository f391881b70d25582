#pragma once

// Minimal double-double (~31 significant digits) built on error-free
// transformations. Only what the series kernels need: +, -, *, scalar ops.

#include <cmath>

namespace dcor::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - dd(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - dd(q2) * b;
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd operator*(dd a, double b) { return a * dd(b); }
inline dd operator*(double a, dd b) { return dd(a) * b; }
inline dd operator+(dd a, double b) { return a + dd(b); }
inline dd operator-(dd a, double b) { return a - dd(b); }
inline dd operator/(dd a, double b) { return a / dd(b); }

inline dd mul_pow2(dd a, double p2) { return {a.hi * p2, a.lo * p2}; }

inline double to_double(dd a) { return a.hi + a.lo; }

// log(x) refined to double-double: l0 = log(x) rounded, then one Newton
// correction through expm1. Accurate to ~1e-31 relative for normal doubles.
inline dd log_dd(double x) {
    double l0 = std::log(x);
    // r = x*exp(-l0) - 1 computed without forming exp(-l0) naively:
    // exp(l0) is within 1 ulp of x, so use expm1 of the residual instead.
    double e = std::exp(l0);
    double r = (x - e) / e;
    double corr = std::log1p(r);
    return quick_two_sum(l0, corr);
}

}  // namespace dcor::detail
