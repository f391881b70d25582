#pragma once

// Scalar special functions used by every series formula. All accuracy
// contracts are enforced by tests against a >=30-digit reference.

#include "dcor/signed_log.hpp"

namespace dcor {

// ln Gamma(x) for x > 0, relative accuracy ~1e-14 including near the zeros
// at x = 1, 2 (dedicated series there). Throws DomainError for x <= 0 or
// non-finite x.
double ln_gamma(double x);

// ln |Gamma(x)| with the sign of Gamma(x), any non-pole real x.
SignedLogValue gamma_signed_log(double x);

// (a)_n = a(a+1)...(a+n-1), with correct sign for a < 0; (a)_0 = 1.
SignedLogValue rising_factorial(double a, long n);

// n!! with (-1)!! = 0!! = 1. Throws DomainError for n < -1.
SignedLogValue double_factorial(long n);

// sin(pi x) with exact zeros at integer x.
double sin_pi(double x);

struct Terminating2F1Result {
    double value = 0.0;
    double condition = 1.0;   // sum|term| / |sum term| in the double pass
    bool used_double_double = false;
    bool precision_loss = false;  // condition beyond double-double capability
};

// 2F1(-m, b; c; z) as the exact finite sum of m+1 terms, compensated
// summation with a double-double fallback when the condition number
// exceeds 1e6. Throws DomainError when a (c)_i factor vanishes before the
// series terminates.
Terminating2F1Result gauss_2f1_terminating_ex(long m, double b, double c, double z);
double gauss_2f1_terminating(long m, double b, double c, double z);

// Gauss series inside the disc, |z| < 1; stops after 5 consecutive terms
// below tol * |partial sum|. Throws NonConvergenceError at the cap.
double gauss_2f1_disc(double a, double b, double c, double z,
                      double tol = 1e-12, long cap = 100000);

// Gauss' theorem at z = 1: Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)),
// requires c-a-b > 0.
double gauss_2f1_at_one(double a, double b, double c);

// Kummer 1F1(a; b; z). Negative z goes through the Kummer transform
// e^z 1F1(b-a; b; -z) so the transformed series has nonnegative terms
// whenever b-a > 0.
double kummer_1f1(double a, double b, double z,
                  double tol = 1e-12, long cap = 100000);

}  // namespace dcor
