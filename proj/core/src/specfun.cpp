#include "dcor/specfun.hpp"

#include <cmath>
#include <limits>

#include "dcor/detail/double_double.hpp"
#include "dcor/errors.hpp"

namespace dcor {

namespace {

using detail::dd;

// Lanczos, g = 7, 9 coefficients (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // log(2*pi)/2
constexpr double kEulerGamma = 0.57721566490153286061;

// zeta(2)..zeta(26)
constexpr double kZeta[] = {
    1.6449340668482264365, 1.2020569031595942854, 1.0823232337111381916,
    1.0369277551433699263, 1.0173430619844491397, 1.0083492773819228268,
    1.0040773561979443394, 1.0020083928260822144, 1.0009945751278180853,
    1.0004941886041194646, 1.0002460865533080483, 1.0001227133475784891,
    1.0000612481350587048, 1.0000305882363070205, 1.0000152822594086519,
    1.0000076371976378998, 1.0000038172932649998, 1.0000019082127165539,
    1.0000009539620338728, 1.0000004769329867878, 1.0000002384505027277,
    1.0000001192199259653, 1.0000000596081890513, 1.0000000298035035147,
    1.0000000149015548284,
};

double lanczos_ln_gamma(double x) {
    // valid for x >= 0.5
    double t = x + kLanczosG - 0.5;
    double sum = kLanczos[0];
    for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (x - 1.0 + i);
    return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(sum);
}

// ln Gamma(1+e) = -log(1+e) + e(1-gamma) + sum_{k>=2} (-1)^k (zeta(k)-1) e^k / k,
// |e| <= 0.5 converges fast; used for |e| <= 0.25 where it converges to 1e-17.
double ln_gamma_near_one(double e) {
    double s = 0.0;
    double ek = e;
    for (int k = 2; k <= 26; ++k) {
        ek *= -e;  // (-1)^k e^k
        double term = (kZeta[k - 2] - 1.0) * ek / k;
        s += term;
        if (std::fabs(term) < 1e-20 * (std::fabs(s) + 1e-30)) break;
    }
    return -std::log1p(e) + e * (1.0 - kEulerGamma) + s;
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("ln_gamma: requires finite x > 0, got x = " +
                          std::to_string(x));
    if (x == 1.0 || x == 2.0) return 0.0;
    if (x < 0.5) return ln_gamma(x + 1.0) - std::log(x);
    if (std::fabs(x - 1.0) <= 0.25) return ln_gamma_near_one(x - 1.0);
    if (std::fabs(x - 2.0) <= 0.25) {
        double e = x - 2.0;
        return ln_gamma_near_one(e) + std::log1p(e);
    }
    return lanczos_ln_gamma(x);
}

double sin_pi(double x) {
    double k = std::nearbyint(x);
    double r = x - k;
    if (r == 0.0) return 0.0;
    double s = std::sin(M_PI * r);
    return (static_cast<long long>(k) % 2 == 0) ? s : -s;
}

SignedLogValue gamma_signed_log(double x) {
    if (x > 0.0) return SignedLogValue::from_log(ln_gamma(x), 1);
    if (x == std::floor(x))
        throw DomainError("gamma_signed_log: pole at nonpositive integer x = " +
                          std::to_string(x));
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x))
    double s = sin_pi(x);
    double lg = std::log(M_PI) - std::log(std::fabs(s)) - ln_gamma(1.0 - x);
    return SignedLogValue::from_log(lg, s > 0 ? 1 : -1);
}

SignedLogValue rising_factorial(double a, long n) {
    if (n < 0) throw DomainError("rising_factorial: n must be >= 0");
    if (!std::isfinite(a)) throw DomainError("rising_factorial: non-finite a");
    SignedLogValue out = SignedLogValue::one();
    dd acc(0.0);
    int sign = 1;
    for (long i = 0; i < n; ++i) {
        double f = a + static_cast<double>(i);
        if (f == 0.0) return SignedLogValue::zero();
        if (f < 0.0) sign = -sign;
        acc = acc + detail::log_dd(std::fabs(f));
    }
    out.log_magnitude = acc.hi;
    out.log_magnitude_lo = acc.lo;
    out.sign = sign;
    return out;
}

SignedLogValue double_factorial(long n) {
    if (n < -1) throw DomainError("double_factorial: n must be >= -1");
    if (n <= 0) return SignedLogValue::one();  // (-1)!! = 0!! = 1
    dd acc(0.0);
    for (long k = n; k >= 2; k -= 2) acc = acc + detail::log_dd(static_cast<double>(k));
    // odd chains end at 1, contributing log 1 = 0
    SignedLogValue out = SignedLogValue::one();
    out.log_magnitude = acc.hi;
    out.log_magnitude_lo = acc.lo;
    return out;
}

namespace {

void check_c_factor(double den_c, double c, long i) {
    if (den_c == 0.0)
        throw DomainError(
            "gauss_2f1_terminating: (c)_i vanishes before termination, c = " +
            std::to_string(c) + ", i = " + std::to_string(i));
}

// compensated (Neumaier) pass
void terminating_sum_double(long m, double b, double c, double z, double& sum,
                            double& sum_abs) {
    double term = 1.0, s = 1.0, comp = 0.0, sabs = 1.0;
    for (long i = 0; i < m; ++i) {
        double num_b = b + static_cast<double>(i);
        double den_c = c + static_cast<double>(i);
        check_c_factor(den_c, c, i);
        if (num_b == 0.0) break;  // all later terms are zero
        term *= static_cast<double>(-m + i) * num_b / (den_c * (i + 1)) * z;
        double t = s + term;
        if (std::fabs(s) >= std::fabs(term))
            comp += (s - t) + term;
        else
            comp += (term - t) + s;
        s = t;
        sabs += std::fabs(term);
    }
    sum = s + comp;
    sum_abs = sabs;
}

void terminating_sum_dd(long m, double b, double c, double z, dd& sum, dd& sum_abs) {
    dd term(1.0);
    sum = dd(1.0);
    sum_abs = dd(1.0);
    for (long i = 0; i < m; ++i) {
        double num_b = b + static_cast<double>(i);
        double den_c = c + static_cast<double>(i);
        check_c_factor(den_c, c, i);
        if (num_b == 0.0) break;
        term = term * dd(static_cast<double>(-m + i)) * dd(num_b) /
               (dd(den_c) * dd(static_cast<double>(i + 1))) * dd(z);
        sum = sum + term;
        dd a = term;
        if (detail::to_double(a) < 0.0) a = -a;
        sum_abs = sum_abs + a;
    }
}

}  // namespace

Terminating2F1Result gauss_2f1_terminating_ex(long m, double b, double c, double z) {
    if (m < 0) throw DomainError("gauss_2f1_terminating: m must be >= 0");
    Terminating2F1Result r;
    if (m == 0) {
        r.value = 1.0;
        return r;
    }
    double s = 0.0, sabs = 0.0;
    terminating_sum_double(m, b, c, z, s, sabs);
    r.condition = sabs / std::max(std::fabs(s), 1e-300);
    r.value = s;
    if (r.condition > 1e6) {
        dd sd, sd_abs;
        terminating_sum_dd(m, b, c, z, sd, sd_abs);
        r.value = detail::to_double(sd);
        r.condition = detail::to_double(sd_abs) / std::max(std::fabs(r.value), 1e-300);
        r.used_double_double = true;
        r.precision_loss = r.condition > 1e20;
    }
    return r;
}

double gauss_2f1_terminating(long m, double b, double c, double z) {
    return gauss_2f1_terminating_ex(m, b, c, z).value;
}

double gauss_2f1_disc(double a, double b, double c, double z, double tol, long cap) {
    if (!(std::fabs(z) < 1.0))
        throw DomainError("gauss_2f1_disc: requires |z| < 1, got z = " + std::to_string(z));
    if (c <= 0.0 && c == std::floor(c))
        throw DomainError("gauss_2f1_disc: c must not be a nonpositive integer");
    double term = 1.0, s = 1.0, comp = 0.0;
    int consecutive_small = 0;
    for (long n = 0; n < cap; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z;
        double t = s + term;
        if (std::fabs(s) >= std::fabs(term))
            comp += (s - t) + term;
        else
            comp += (term - t) + s;
        s = t;
        if (std::fabs(term) < tol * std::fabs(s + comp))
            ++consecutive_small;
        else
            consecutive_small = 0;
        if (consecutive_small >= 5) return s + comp;
        if (term == 0.0) return s + comp;  // terminated exactly
    }
    throw NonConvergenceError("gauss_2f1_disc: term cap reached", s + comp, std::fabs(term), cap);
}

double gauss_2f1_at_one(double a, double b, double c) {
    double cab = c - a - b;
    if (!(cab > 0.0))
        throw DomainError("gauss_2f1_at_one: requires c - a - b > 0, got " +
                          std::to_string(cab));
    SignedLogValue num = gamma_signed_log(c) * gamma_signed_log(cab);
    SignedLogValue den = gamma_signed_log(c - a) * gamma_signed_log(c - b);
    return (num / den).to_real();
}

double kummer_1f1(double a, double b, double z, double tol, long cap) {
    if (b <= 0.0 && b == std::floor(b))
        throw DomainError("kummer_1f1: b must not be a nonpositive integer");
    if (z < 0.0 && b - a > 0.0) {
        // Kummer transform: e^z 1F1(b-a; b; -z), transformed series has
        // nonnegative terms.
        return std::exp(z) * kummer_1f1(b - a, b, -z, tol, cap);
    }
    double term = 1.0, s = 1.0, comp = 0.0;
    int consecutive_small = 0;
    for (long n = 0; n < cap; ++n) {
        term *= (a + n) / ((b + n) * (n + 1)) * z;
        double t = s + term;
        if (std::fabs(s) >= std::fabs(term))
            comp += (s - t) + term;
        else
            comp += (term - t) + s;
        s = t;
        if (std::fabs(term) < tol * std::fabs(s + comp))
            ++consecutive_small;
        else
            consecutive_small = 0;
        if (consecutive_small >= 5 || term == 0.0) return s + comp;
    }
    throw NonConvergenceError("kummer_1f1: term cap reached", s + comp, std::fabs(term), cap);
}

}  // namespace dcor
