#pragma once

// Population distance covariance / variance / correlation for each family:
// every closed form, plus the series routes through the engine.

#include <optional>

#include "dcor/distribution.hpp"
#include "dcor/series.hpp"

namespace dcor {
namespace pop {

// ---- bivariate normal ----

// Series route: 4/pi sum_{l>=1} ((2l-3)!!)^2/(2l)! (1 - 2^{-(2l-1)}) rho^{2l}.
SeriesEvaluation dcov2_bvn_series(double rho, double tol = 1e-12);

// Closed form: (4/pi)(rho asin(rho) + sqrt(1-rho^2) - rho asin(rho/2)
//               - sqrt(4-rho^2) + 1). Valid for |rho| <= 1.
double dcov2_bvn_closed(double rho);

// 4/3 - 4(sqrt(3)-1)/pi.
double dvar_normal_univariate();

// Generalized Hermite-diagonal series (rho_seq as in GeneralizedBVN).
SeriesEvaluation dcov2_bvn_generalized(const std::function<double(int)>& rho_seq,
                                       double tol = 1e-12, int cap = 400);

// Closed form for the +-rho mixture (rho_n = rho^n for n even, else 0).
double dcov2_bvn_mixture_closed(double rho);

// ---- multivariate normal (affinely invariant) ----

// Lambda_XY = rho I_p closed form via Gauss 2F1; rho = 1 uses the z = 1
// evaluation for the first term.
double dcov2_mvn_diag(int p, double rho);

// Affinely invariant distance variance in dimension p.
double dvar_mvn(int p);

// General Lambda_XY through the matrix-index engine.
SeriesEvaluation dcov2_mvn_general(const MultivariateNormal& spec, int degree_cap = 14,
                                   long term_limit = 20000000);

// ---- bivariate gamma (Lancaster/Laguerre family) ----

SeriesEvaluation dcov2_gamma(double alpha, double beta, double lambda,
                             double tol = 1e-12);

struct ExtrapolatedValue {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Distance variance of a gamma(alpha) marginal: extrapolation of
// dcov2_gamma(alpha, alpha, lambda) over lambda in {1-2^-4, ..., 1-2^-9}.
ExtrapolatedValue dvar_gamma(double alpha);

// ---- bivariate Poisson ----

SeriesEvaluation dcov2_poisson(double a, double lambda, double tol = 1e-12);

// ---- bivariate negative binomial ----

SeriesEvaluation dcov2_negbinomial(double beta, double c, double lambda,
                                   double tol = 1e-12);

// ---- distance correlation dispatch ----

struct DcorSummary {
    double v2_xy = 0.0;
    double v2_xx = 0.0;
    double v2_yy = 0.0;
    double r = 0.0;
    std::optional<SeriesEvaluation> diag_xy;
    std::optional<SeriesEvaluation> diag_xx;
    std::optional<SeriesEvaluation> diag_yy;
    double dvar_error_estimate = 0.0;  // nonzero when a variance was extrapolated
};

// alpha = beta gamma summary per the matched-correlation convention.
DcorSummary dcor_gamma(double alpha, double lambda, double tol = 1e-12);

// Family dispatch. Poisson distance variance uses the lambda = 1 series;
// negative binomial uses quadrature on the marginal cf; gamma with
// alpha != beta has no supported correlation (throws DomainError) though
// dcov2_gamma itself is fine.
DcorSummary dcor(const DistributionSpec& spec, double tol = 1e-12);

}  // namespace pop
}  // namespace dcor
