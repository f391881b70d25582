#pragma once

// Generic evaluation of the double series
//   V^2 = (1 / gamma_p gamma_q) sum_{j,k >= 1} rho_j rho_k A(j,k) B(j,k)
// summed by diagonals d = j+k with truncation-error control, plus the
// matrix-index variant where the indices are p x q nonnegative integer
// matrices with row/column parity constraints.

#include <functional>
#include <vector>

#include "dcor/errors.hpp"

namespace dcor {

// gamma_p = pi^{(p+1)/2} / Gamma((p+1)/2); gamma_0 = 1, gamma_1 = pi,
// gamma_2 = 2 pi.
struct GammaConstant {
    int p = 1;
    double value = 0.0;
    static GammaConstant for_dimension(int p);
};

struct SeriesEvaluation {
    double value = 0.0;
    int max_index = 0;      // largest j+k (or total degree) included
    long terms_used = 0;    // coefficient pairs accumulated
    double tail_bound = 0.0;  // estimated absolute truncation error
    bool converged = false;
    bool precision_loss = false;  // a coefficient path exceeded double-double capability
};

// Family-specific callbacks for the scalar-index series. rho(0) = 1 by
// convention and index 0 is excluded from the sum. A and B must be
// symmetric. prepare(d), when set, runs serially before diagonal d is
// evaluated (coefficient tables, ladders); A/B calls for that diagonal may
// then run concurrently.
struct CoefficientProvider {
    std::function<double(int)> rho;
    std::function<double(int, int)> A;
    std::function<double(int, int)> B;
    std::function<void(int)> prepare;  // optional
    std::function<bool()> precision_loss;  // optional diagnostic poll
};

struct SeriesOptions {
    double tol_rel = 1e-12;
    int cap = 400;  // largest diagonal j+k
};

// Sums diagonals d = 2, 3, ...; stops once the last 5 diagonal totals are
// each below tol_rel * |partial sum|. Tail bound by geometric extrapolation
// of the last two nonzero diagonal totals. Throws NonConvergenceError when
// d exceeds the cap with the stop rule unmet.
SeriesEvaluation eval_double_series(const CoefficientProvider& provider,
                                    const GammaConstant& gamma_p,
                                    const GammaConstant& gamma_q,
                                    const SeriesOptions& opts = {});

// Matrix-index variant (Eq.-style coefficients depending on row/column sums
// of J+K only). The inner sum over all splits J+K = S is folded in closed
// form, so the enumeration runs over single matrices S by total degree,
// then lexicographic order.
struct MatrixSeriesSpec {
    int p = 1;
    int q = 1;
    // entry (r, c) of the cross-covariance matrix driving Lambda^S
    std::function<double(int, int)> lambda;
    // A given the row sums of S and |S|; B given the column sums and |S|.
    std::function<double(const std::vector<int>&, int)> A;
    std::function<double(const std::vector<int>&, int)> B;
};

struct MatrixSeriesOptions {
    int degree_cap = 14;
    long term_limit = 20000000;  // enumerated S matrices before CapacityError
    double tol_rel = 1e-12;
};

SeriesEvaluation eval_matrix_index_series(const MatrixSeriesSpec& spec,
                                          const MatrixSeriesOptions& opts = {});

}  // namespace dcor
