#include "dcor/distribution.hpp"

#include <cmath>
#include <string>

namespace dcor {

namespace {

[[noreturn]] void bad_range(const std::string& what) { throw DomainError(what); }

}  // namespace

BivariateNormal::BivariateNormal(double rho) : rho(rho) {
    if (!(std::fabs(rho) < 1.0))
        bad_range("BivariateNormal: rho must lie in (-1, 1), got " + std::to_string(rho));
}

GeneralizedBVN::GeneralizedBVN(std::function<double(int)> rs) : rho_seq(std::move(rs)) {
    if (!rho_seq) bad_range("GeneralizedBVN: rho_seq callback must be set");
    if (rho_seq(0) != 1.0) bad_range("GeneralizedBVN: rho_seq(0) must equal 1");
}

MixtureBVN::MixtureBVN(double rho) : rho(rho) {
    if (!(rho >= 0.0 && rho < 1.0))
        bad_range("MixtureBVN: rho must lie in [0, 1), got " + std::to_string(rho));
}

MultivariateNormal::MultivariateNormal(int p_, int q_, std::vector<double> lam)
    : p(p_), q(q_), lambda_xy(std::move(lam)) {
    if (p < 1 || q < 1) bad_range("MultivariateNormal: p and q must be >= 1");
    if (lambda_xy.size() != static_cast<size_t>(p) * static_cast<size_t>(q))
        bad_range("MultivariateNormal: lambda_xy must be p*q entries");
    for (double v : lambda_xy)
        if (!std::isfinite(v)) bad_range("MultivariateNormal: non-finite lambda entry");
    if (!(spectral_norm() < 1.0))
        bad_range("MultivariateNormal: spectral norm of lambda_xy must be < 1, got " +
                  std::to_string(spectral_norm()));
}

double MultivariateNormal::spectral_norm() const {
    // power iteration on lambda^T lambda (tiny matrices; fixed iteration count)
    std::vector<double> v(q, 1.0 / std::sqrt(static_cast<double>(q)));
    std::vector<double> u(p, 0.0), w(q, 0.0);
    double s = 0.0;
    for (int it = 0; it < 200; ++it) {
        for (int r = 0; r < p; ++r) {
            double acc = 0.0;
            for (int c = 0; c < q; ++c) acc += lambda(r, c) * v[c];
            u[r] = acc;
        }
        for (int c = 0; c < q; ++c) {
            double acc = 0.0;
            for (int r = 0; r < p; ++r) acc += lambda(r, c) * u[r];
            w[c] = acc;
        }
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (int c = 0; c < q; ++c) v[c] = w[c] / norm;
        double snew = std::sqrt(norm);
        if (std::fabs(snew - s) <= 1e-14 * snew && it > 4) return snew;
        s = snew;
    }
    return s;
}

BivariateGamma::BivariateGamma(double alpha_, double beta_, double lambda_)
    : alpha(alpha_), beta(beta_), lambda(lambda_) {
    if (!(beta > 0.0) || !(alpha >= beta))
        bad_range("BivariateGamma: requires alpha >= beta > 0, got alpha = " +
                  std::to_string(alpha) + ", beta = " + std::to_string(beta));
    if (!(lambda >= 0.0 && lambda < 1.0))
        bad_range("BivariateGamma: lambda must lie in [0, 1), got " + std::to_string(lambda));
}

BivariatePoisson::BivariatePoisson(double a_, double lambda_) : a(a_), lambda(lambda_) {
    if (!(a > 0.0)) bad_range("BivariatePoisson: a must be > 0, got " + std::to_string(a));
    if (!(lambda >= 0.0 && lambda <= 1.0))
        bad_range("BivariatePoisson: lambda must lie in [0, 1], got " + std::to_string(lambda));
}

BivariateNegBinomial::BivariateNegBinomial(double beta_, double c_, double lambda_)
    : beta(beta_), c(c_), lambda(lambda_) {
    if (!(beta > 0.0))
        bad_range("BivariateNegBinomial: beta must be > 0, got " + std::to_string(beta));
    if (!(c > 0.0 && c < 1.0))
        bad_range("BivariateNegBinomial: c must lie in (0, 1), got " + std::to_string(c));
    if (!(lambda >= 0.0 && lambda < 1.0))
        bad_range("BivariateNegBinomial: lambda must lie in [0, 1), got " +
                  std::to_string(lambda));
}

const char* family_name(const DistributionSpec& spec) {
    struct Visitor {
        const char* operator()(const BivariateNormal&) const { return "bvnormal"; }
        const char* operator()(const GeneralizedBVN&) const { return "genbvn"; }
        const char* operator()(const MixtureBVN&) const { return "mixture"; }
        const char* operator()(const MultivariateNormal&) const { return "mvnormal"; }
        const char* operator()(const BivariateGamma&) const { return "gamma"; }
        const char* operator()(const BivariatePoisson&) const { return "poisson"; }
        const char* operator()(const BivariateNegBinomial&) const { return "negbinomial"; }
    };
    return std::visit(Visitor{}, spec);
}

}  // namespace dcor
