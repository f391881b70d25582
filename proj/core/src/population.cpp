#include "dcor/population.hpp"

#include <cmath>

#include "dcor/quadrature.hpp"
#include "dcor/charfun.hpp"
#include "dcor/specfun.hpp"

namespace dcor {
namespace pop {

namespace {

// Hermite-family marginal integral: A(j,k) = sqrt(pi) 2^{-(j+k-2)/2}
// (j+k-3)!! / sqrt(j! k!) for j+k even, 0 otherwise.
double hermite_pair_coeff(int j, int k) {
    int d = j + k;
    if (d % 2 != 0) return 0.0;
    SignedLogValue v = double_factorial(d - 3);
    SignedLogValue jf = rising_factorial(1.0, j);  // j!
    SignedLogValue kf = rising_factorial(1.0, k);
    double lg = 0.5 * std::log(M_PI) - 0.5 * (d - 2) * std::log(2.0) +
                v.log_magnitude - 0.5 * (jf.log_magnitude + kf.log_magnitude);
    return std::exp(lg);
}

CoefficientProvider hermite_provider(std::function<double(int)> rho_seq) {
    CoefficientProvider p;
    p.rho = std::move(rho_seq);
    p.A = hermite_pair_coeff;
    p.B = hermite_pair_coeff;
    return p;
}

const GammaConstant kGamma1 = GammaConstant::for_dimension(1);

}  // namespace

SeriesEvaluation dcov2_bvn_series(double rho, double tol) {
    if (!(std::fabs(rho) < 1.0))
        throw DomainError("dcov2_bvn_series: |rho| must be < 1");
    if (rho == 0.0) {
        SeriesEvaluation out;
        out.converged = true;
        return out;
    }
    auto provider = hermite_provider([rho](int n) { return std::pow(rho, n); });
    SeriesOptions opts;
    opts.tol_rel = tol;
    return eval_double_series(provider, kGamma1, kGamma1, opts);
}

double dcov2_bvn_closed(double rho) {
    double r = std::fabs(rho);
    if (r > 1.0) throw DomainError("dcov2_bvn_closed: |rho| must be <= 1");
    return 4.0 / M_PI *
           (r * std::asin(r) + std::sqrt(1.0 - r * r) - r * std::asin(r / 2.0) -
            std::sqrt(4.0 - r * r) + 1.0);
}

double dvar_normal_univariate() {
    return 4.0 / 3.0 - 4.0 * (std::sqrt(3.0) - 1.0) / M_PI;
}

SeriesEvaluation dcov2_bvn_generalized(const std::function<double(int)>& rho_seq,
                                       double tol, int cap) {
    auto provider = hermite_provider(rho_seq);
    SeriesOptions opts;
    opts.tol_rel = tol;
    opts.cap = cap;
    return eval_double_series(provider, kGamma1, kGamma1, opts);
}

double dcov2_bvn_mixture_closed(double rho) {
    double r = std::fabs(rho);
    if (r > 1.0) throw DomainError("dcov2_bvn_mixture_closed: |rho| must be <= 1");
    return 4.0 / M_PI *
           (r / 2.0 * std::asin(r) + 0.5 * std::sqrt(1.0 - r * r) -
            r * std::asin(r / 2.0) - std::sqrt(4.0 - r * r) + 1.5);
}

namespace {

double mvn_front_factor(int p) {
    double gp1 = GammaConstant::for_dimension(p - 1).value;
    double gp = GammaConstant::for_dimension(p).value;
    return 4.0 * M_PI * gp1 * gp1 / (gp * gp);
}

}  // namespace

double dcov2_mvn_diag(int p, double rho) {
    if (p < 1) throw DomainError("dcov2_mvn_diag: p must be >= 1");
    double r = std::fabs(rho);
    if (r > 1.0) throw DomainError("dcov2_mvn_diag: |rho| must be <= 1");
    double c = 0.5 * p;
    double f1 = (r == 1.0) ? gauss_2f1_at_one(-0.5, -0.5, c)
                           : gauss_2f1_disc(-0.5, -0.5, c, r * r);
    double f2 = gauss_2f1_disc(-0.5, -0.5, c, r * r / 4.0);
    return mvn_front_factor(p) * (f1 - 2.0 * f2 + 1.0);
}

double dvar_mvn(int p) {
    if (p < 1) throw DomainError("dvar_mvn: p must be >= 1");
    double t1 = std::exp(ln_gamma(0.5 * p) + ln_gamma(0.5 * p + 1.0) -
                         2.0 * ln_gamma(0.5 * (p + 1)));
    double f2 = gauss_2f1_disc(-0.5, -0.5, 0.5 * p, 0.25);
    return mvn_front_factor(p) * (t1 - 2.0 * f2 + 1.0);
}

SeriesEvaluation dcov2_mvn_general(const MultivariateNormal& spec, int degree_cap,
                                   long term_limit) {
    MatrixSeriesSpec ms;
    ms.p = spec.p;
    ms.q = spec.q;
    ms.lambda = [&spec](int r, int c) { return spec.lambda(r, c); };
    auto coeff = [](const std::vector<int>& sums, int total) {
        // Gamma(1/2(total - 1)) / Gamma(1/2 total + 1/2 dim) *
        //   prod_r Gamma(1/2(sum_r + 1)), assembled in log space.
        double lg = ln_gamma(0.5 * (total - 1)) -
                    ln_gamma(0.5 * total + 0.5 * static_cast<double>(sums.size()));
        for (int s : sums) lg += ln_gamma(0.5 * (s + 1));
        return std::exp(lg);
    };
    ms.A = coeff;
    ms.B = coeff;
    MatrixSeriesOptions opts;
    opts.degree_cap = degree_cap;
    opts.term_limit = term_limit;
    return eval_matrix_index_series(ms, opts);
}

namespace {

DcorSummary summarize(double v2_xy, double v2_xx, double v2_yy) {
    DcorSummary out;
    out.v2_xy = v2_xy < 0.0 && v2_xy > -1e-15 ? 0.0 : v2_xy;
    out.v2_xx = v2_xx;
    out.v2_yy = v2_yy;
    if (out.v2_xy <= 0.0 || v2_xx <= 0.0 || v2_yy <= 0.0)
        out.r = 0.0;
    else
        out.r = std::sqrt(out.v2_xy) / std::pow(v2_xx * v2_yy, 0.25);
    if (out.r > 1.0 && out.r < 1.0 + 1e-9) out.r = 1.0;
    return out;
}

}  // namespace

DcorSummary dcor_gamma(double alpha, double lambda, double tol) {
    BivariateGamma validated(alpha, alpha, lambda);
    SeriesEvaluation xy = dcov2_gamma(validated.alpha, validated.alpha,
                                      validated.lambda, tol);
    ExtrapolatedValue dv = dvar_gamma(alpha);
    DcorSummary out = summarize(xy.value, dv.value, dv.value);
    out.diag_xy = xy;
    out.dvar_error_estimate = dv.error_estimate;
    return out;
}

DcorSummary dcor(const DistributionSpec& spec, double tol) {
    struct Visitor {
        double tol;

        DcorSummary operator()(const BivariateNormal& s) const {
            double dv = dvar_normal_univariate();
            return summarize(dcov2_bvn_closed(s.rho), dv, dv);
        }
        DcorSummary operator()(const GeneralizedBVN& s) const {
            SeriesEvaluation xy = dcov2_bvn_generalized(s.rho_seq, tol);
            double dv = dvar_normal_univariate();
            DcorSummary out = summarize(xy.value, dv, dv);
            out.diag_xy = xy;
            return out;
        }
        DcorSummary operator()(const MixtureBVN& s) const {
            double dv = dvar_normal_univariate();
            return summarize(dcov2_bvn_mixture_closed(s.rho), dv, dv);
        }
        DcorSummary operator()(const MultivariateNormal& s) const {
            SeriesEvaluation xy = dcov2_mvn_general(s);
            DcorSummary out = summarize(xy.value, dvar_mvn(s.p), dvar_mvn(s.q));
            out.diag_xy = xy;
            return out;
        }
        DcorSummary operator()(const BivariateGamma& s) const {
            if (s.alpha != s.beta)
                throw DomainError(
                    "dcor: gamma correlation is only defined here for alpha == beta "
                    "(use dcov2_gamma for the covariance alone)");
            return dcor_gamma(s.alpha, s.lambda, tol);
        }
        DcorSummary operator()(const BivariatePoisson& s) const {
            SeriesEvaluation xy = dcov2_poisson(s.a, s.lambda, tol);
            SeriesEvaluation dv = dcov2_poisson(s.a, 1.0, tol);
            DcorSummary out = summarize(xy.value, dv.value, dv.value);
            out.diag_xy = xy;
            out.diag_xx = dv;
            return out;
        }
        DcorSummary operator()(const BivariateNegBinomial& s) const {
            SeriesEvaluation xy = dcov2_negbinomial(s.beta, s.c, s.lambda, tol);
            // distance variance depends only on the marginal; quadrature on
            // psi_X(s+t) with the closed-form negative binomial cf
            oracle::QuadratureConfig cfg;
            auto dv = oracle::dvar_quadrature_lattice_marginal(
                [s](double t) { return oracle::nb_marginal_cf(s.beta, s.c, t); }, cfg);
            DcorSummary out = summarize(xy.value, dv.value, dv.value);
            out.diag_xy = xy;
            out.dvar_error_estimate = dv.error_estimate;
            return out;
        }
    };
    return std::visit(Visitor{tol}, spec);
}

}  // namespace pop
}  // namespace dcor
