#pragma once

// Magnitudes as natural log plus explicit sign, so Pochhammer/gamma/
// double-factorial products never overflow. Conversion to a plain double
// happens only at final term assembly.

#include <cmath>
#include <cstdint>
#include <limits>

#include "dcor/detail/double_double.hpp"

namespace dcor {

struct SignedLogValue {
    // log_magnitude is the high part; log_magnitude_lo carries the bits a
    // single double cannot hold once |log| is large (round-trip contract).
    double log_magnitude = -std::numeric_limits<double>::infinity();
    double log_magnitude_lo = 0.0;
    int sign = 0;  // -1, 0, +1;  sign == 0 iff log_magnitude == -inf

    SignedLogValue() = default;

    static SignedLogValue zero() { return {}; }

    static SignedLogValue one() {
        SignedLogValue v;
        v.log_magnitude = 0.0;
        v.log_magnitude_lo = 0.0;
        v.sign = 1;
        return v;
    }

    static SignedLogValue from_real(double x) {
        SignedLogValue v;
        if (x == 0.0) return v;
        v.sign = x > 0 ? 1 : -1;
        detail::dd l = detail::log_dd(std::fabs(x));
        v.log_magnitude = l.hi;
        v.log_magnitude_lo = l.lo;
        return v;
    }

    static SignedLogValue from_log(double log_mag, int sign) {
        SignedLogValue v;
        if (sign == 0) return v;
        v.log_magnitude = log_mag;
        v.log_magnitude_lo = 0.0;
        v.sign = sign < 0 ? -1 : 1;
        return v;
    }

    bool is_zero() const { return sign == 0; }

    double to_real() const {
        if (sign == 0) return 0.0;
        double m = std::exp(log_magnitude);
        m += m * log_magnitude_lo;  // exp(hi)*(1+lo) to first order
        return sign < 0 ? -m : m;
    }

    SignedLogValue& operator*=(const SignedLogValue& o) {
        if (sign == 0 || o.sign == 0) {
            *this = zero();
            return *this;
        }
        detail::dd s = detail::dd(log_magnitude, log_magnitude_lo) +
                       detail::dd(o.log_magnitude, o.log_magnitude_lo);
        log_magnitude = s.hi;
        log_magnitude_lo = s.lo;
        sign *= o.sign;
        return *this;
    }

    friend SignedLogValue operator*(SignedLogValue a, const SignedLogValue& b) {
        a *= b;
        return a;
    }

    SignedLogValue& operator*=(double x) { return *this *= from_real(x); }

    friend SignedLogValue operator/(const SignedLogValue& a, const SignedLogValue& b) {
        SignedLogValue r;
        if (a.sign == 0) return r;
        detail::dd s = detail::dd(a.log_magnitude, a.log_magnitude_lo) -
                       detail::dd(b.log_magnitude, b.log_magnitude_lo);
        r.log_magnitude = s.hi;
        r.log_magnitude_lo = s.lo;
        r.sign = a.sign * b.sign;
        return r;
    }
};

}  // namespace dcor
