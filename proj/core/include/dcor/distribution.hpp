#pragma once

// Joint-family identification. Parameter ranges are validated at
// construction; violations throw DomainError naming the violated range.

#include <functional>
#include <variant>
#include <vector>

#include "dcor/errors.hpp"

namespace dcor {

struct BivariateNormal {
    double rho;
    explicit BivariateNormal(double rho);
};

// Hermite-diagonal generalization: rho_seq(n) is the coefficient sequence,
// rho_seq(0) must be 1 and |rho_seq(n)| <= 1. The square-summability /
// moment-sequence condition is the caller's contract; the series engine
// still enforces its own stop rule and cap.
struct GeneralizedBVN {
    std::function<double(int)> rho_seq;
    explicit GeneralizedBVN(std::function<double(int)> rho_seq);
};

// Equal mixture of the +rho and -rho bivariate normals.
struct MixtureBVN {
    double rho;
    explicit MixtureBVN(double rho);
};

struct MultivariateNormal {
    int p;
    int q;
    std::vector<double> lambda_xy;  // row-major p x q, spectral norm < 1

    MultivariateNormal(int p, int q, std::vector<double> lambda_xy);
    double lambda(int r, int c) const { return lambda_xy[r * q + c]; }
    double spectral_norm() const;
};

struct BivariateGamma {
    double alpha;
    double beta;
    double lambda;
    BivariateGamma(double alpha, double beta, double lambda);
};

struct BivariatePoisson {
    double a;
    double lambda;
    BivariatePoisson(double a, double lambda);
};

struct BivariateNegBinomial {
    double beta;
    double c;
    double lambda;
    BivariateNegBinomial(double beta, double c, double lambda);
};

using DistributionSpec =
    std::variant<BivariateNormal, GeneralizedBVN, MixtureBVN, MultivariateNormal,
                 BivariateGamma, BivariatePoisson, BivariateNegBinomial>;

// Short family tag for reports ("bvnormal", "gamma", ...).
const char* family_name(const DistributionSpec& spec);

}  // namespace dcor
