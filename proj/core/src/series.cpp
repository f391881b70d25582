#include "dcor/series.hpp"

#include <cmath>
#include <deque>
#include <string>

#include "dcor/parallel.hpp"
#include "dcor/specfun.hpp"

namespace dcor {

GammaConstant GammaConstant::for_dimension(int p) {
    if (p < 0) throw DomainError("GammaConstant: dimension must be >= 0");
    GammaConstant g;
    g.p = p;
    g.value = std::pow(M_PI, (p + 1) / 2.0) / std::exp(ln_gamma((p + 1) / 2.0));
    return g;
}

namespace {

struct TailTracker {
    // last two nonzero totals for the geometric tail estimate
    double last_nonzero = 0.0;
    double prev_nonzero = 0.0;

    void push(double diag_total) {
        if (diag_total != 0.0) {
            prev_nonzero = last_nonzero;
            last_nonzero = diag_total;
        }
    }

    // bound = |last| * r / (1 - r) with r = |last/prev|; r >= 1 means the
    // estimate is unavailable (signalled as +inf).
    double bound() const {
        if (last_nonzero == 0.0) return 0.0;
        if (prev_nonzero == 0.0) return std::fabs(last_nonzero);
        double r = std::fabs(last_nonzero / prev_nonzero);
        if (r >= 1.0) return std::numeric_limits<double>::infinity();
        return std::fabs(last_nonzero) * r / (1.0 - r);
    }
};

constexpr int kStopStreak = 5;
constexpr double kAbsFloor = 1e-300;

}  // namespace

SeriesEvaluation eval_double_series(const CoefficientProvider& provider,
                                    const GammaConstant& gamma_p,
                                    const GammaConstant& gamma_q,
                                    const SeriesOptions& opts) {
    if (!(opts.tol_rel > 0.0)) throw DomainError("eval_double_series: tol_rel must be > 0");
    if (opts.cap < 4) throw DomainError("eval_double_series: cap must be >= 4");

    const double norm = 1.0 / (gamma_p.value * gamma_q.value);
    double sum = 0.0;
    long terms = 0;
    int streak = 0;
    TailTracker tail;
    std::vector<double> rho(1, 0.0);  // rho[j], filled lazily; index 0 unused
    std::vector<double> slots;

    for (int d = 2; d <= opts.cap; ++d) {
        if (provider.prepare) provider.prepare(d);
        while (static_cast<int>(rho.size()) <= d)
            rho.push_back(provider.rho(static_cast<int>(rho.size())));
        const int n = d - 1;
        slots.assign(n, 0.0);
        auto eval_one = [&](std::size_t idx) {
            int j = static_cast<int>(idx) + 1;
            int k = d - j;
            double a = provider.A(j, k);
            double b = provider.B(j, k);
            slots[idx] = rho[j] * rho[k] * a * b;
        };
        if (n >= 64)
            parallel_for_index(static_cast<std::size_t>(n), eval_one);
        else
            for (int i = 0; i < n; ++i) eval_one(static_cast<std::size_t>(i));
        double diag = pairwise_sum(slots);
        sum += diag;
        terms += n;
        tail.push(diag);

        bool small = std::fabs(diag) <= opts.tol_rel * std::max(std::fabs(sum), kAbsFloor);
        streak = small ? streak + 1 : 0;
        if (streak >= kStopStreak) {
            SeriesEvaluation out;
            out.value = sum * norm;
            out.max_index = d;
            out.terms_used = terms;
            double tb = tail.bound();
            out.tail_bound = std::isfinite(tb) ? tb * norm : tb;
            out.converged = true;
            out.precision_loss = provider.precision_loss && provider.precision_loss();
            return out;
        }
    }
    throw NonConvergenceError(
        "eval_double_series: diagonal cap " + std::to_string(opts.cap) +
            " reached with stop rule unmet",
        sum * norm, tail.bound() * norm, terms);
}

namespace {

// advance a composition vector over entries with fixed total (odometer in
// lexicographic order); returns false when exhausted.
bool next_composition(std::vector<int>& v, int total) {
    int n = static_cast<int>(v.size());
    if (n == 1) return false;
    // find rightmost position before the last with a nonzero tail to move
    int rest = v[n - 1];
    for (int i = n - 2; i >= 0; --i) {
        if (v[i] > 0) {
            v[i] -= 1;
            v[i + 1] = rest + 1;
            for (int j = i + 2; j < n; ++j) {
                v[i + 1] += v[j];
                v[j] = 0;
            }
            return true;
        }
        rest += v[i];
    }
    (void)total;
    return false;
}

void first_composition(std::vector<int>& v, int total) {
    std::fill(v.begin(), v.end(), 0);
    v[0] = total;
}

}  // namespace

SeriesEvaluation eval_matrix_index_series(const MatrixSeriesSpec& spec,
                                          const MatrixSeriesOptions& opts) {
    if (spec.p < 1 || spec.q < 1)
        throw DomainError("eval_matrix_index_series: p, q must be >= 1");
    if (opts.degree_cap < 2)
        throw DomainError("eval_matrix_index_series: degree_cap must be >= 2");

    const int p = spec.p, q = spec.q, cells = p * q;
    std::vector<double> lam(cells);
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < q; ++c) lam[r * q + c] = spec.lambda(r, c);

    // log(2^s / s!) and log(1/s!) tables for the split-multiplicity factor
    const int cap = opts.degree_cap;
    std::vector<double> inv_fact(cap + 1), pow2_over_fact(cap + 1);
    {
        double f = 1.0;
        for (int s = 0; s <= cap; ++s) {
            if (s > 0) f *= s;
            inv_fact[s] = 1.0 / f;
            pow2_over_fact[s] = std::pow(2.0, s) / f;
        }
    }

    double sum = 0.0;
    long terms = 0;
    long enumerated = 0;
    TailTracker tail;
    int streak = 0;
    std::vector<int> S(cells);
    std::vector<int> row_sums(p), col_sums(q);

    // row/col sums all even forces |S| even, so odd degrees are empty; they
    // still count toward the stop streak as exact zero diagonals would.
    for (int d = 2; d <= cap; d += 2) {
        double diag = 0.0;
        first_composition(S, d);
        bool more = true;
        while (more) {
            if (++enumerated > opts.term_limit)
                throw CapacityError(
                    "eval_matrix_index_series: enumeration exceeds term limit " +
                    std::to_string(opts.term_limit));
            // parity of row and column sums
            std::fill(row_sums.begin(), row_sums.end(), 0);
            std::fill(col_sums.begin(), col_sums.end(), 0);
            for (int r = 0; r < p; ++r)
                for (int c = 0; c < q; ++c) {
                    row_sums[r] += S[r * q + c];
                    col_sums[c] += S[r * q + c];
                }
            bool even = true;
            for (int r = 0; r < p && even; ++r) even = (row_sums[r] % 2) == 0;
            for (int c = 0; c < q && even; ++c) even = (col_sums[c] % 2) == 0;
            if (even) {
                // Lambda^S and the split multiplicity
                // sum_{J+K=S, J,K != 0} 1/(J!K!) = prod 2^{S_rc}/S_rc! - 2 prod 1/S_rc!
                double lam_pow = 1.0, split_all = 1.0, split_edge = 1.0;
                for (int i = 0; i < cells && lam_pow != 0.0; ++i) {
                    int s = S[i];
                    if (s > 0) {
                        lam_pow *= std::pow(lam[i], s);
                        split_all *= pow2_over_fact[s];
                        split_edge *= inv_fact[s];
                    }
                }
                if (lam_pow != 0.0) {
                    double mult = split_all - 2.0 * split_edge;
                    double a = spec.A(row_sums, d);
                    double b = spec.B(col_sums, d);
                    diag += a * b * lam_pow * mult;
                    ++terms;
                }
            }
            more = next_composition(S, d);
        }
        sum += diag;
        tail.push(diag);
        bool small = std::fabs(diag) <= opts.tol_rel * std::max(std::fabs(sum), kAbsFloor);
        streak = small ? streak + 1 : 0;
    }

    const double norm = 1.0 / (GammaConstant::for_dimension(p).value *
                               GammaConstant::for_dimension(q).value);
    double tb = tail.bound();
    if (!std::isfinite(tb))
        throw NonConvergenceError(
            "eval_matrix_index_series: degree totals are not decreasing at cap " +
                std::to_string(cap),
            sum * norm, tb, terms);
    SeriesEvaluation out;
    out.value = sum * norm;
    out.max_index = cap;
    out.terms_used = terms;
    out.tail_bound = tb * norm;
    out.converged = true;
    (void)streak;
    return out;
}

}  // namespace dcor
