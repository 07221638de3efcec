#include "qrngkit/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qrngkit::sp90b {

double binary_min_entropy(uint64_t mcv, uint64_t n) {
    if (n == 0 || 2 * mcv < n || mcv > n)
        throw std::invalid_argument("binary_min_entropy: need n/2 <= mcv <= n");
    if (mcv == n) return 0.0;
    if (2 * mcv == n) return 1.0;
    const double p = static_cast<double>(mcv) / static_cast<double>(n);
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double binomial_mcv_pvalue(uint64_t mcv, uint64_t n) {
    if (n == 0 || 2 * mcv < n || mcv > n)
        throw std::invalid_argument("binomial_mcv_pvalue: need n/2 <= mcv <= n");

    // log C(n, mcv) - n log 2, in extended precision; the remaining terms
    // follow by the exact ratio C(n,k+1)/C(n,k) = (n-k)/(k+1) and shrink
    // monotonically for k >= n/2, so summing upward from the largest term
    // keeps the tail sum exact to ~1e-14 relative.
    const long double nl = static_cast<long double>(n);
    const long double kl = static_cast<long double>(mcv);
    long double log_term = std::lgammal(nl + 1.0L) - std::lgammal(kl + 1.0L) -
                           std::lgammal(nl - kl + 1.0L) - nl * std::log(2.0L);
    long double term = std::exp(log_term);
    long double sum = 0.0L;
    for (uint64_t k = mcv; k <= n; ++k) {
        sum += term;
        term *= static_cast<long double>(n - k) / static_cast<long double>(k + 1);
    }
    const long double p = 2.0L * sum;
    return p >= 1.0L ? 1.0 : static_cast<double>(p);
}

namespace {

// Regularized lower incomplete gamma P(a, x) by its power series,
// for x < a + 1.
double gamma_p_series(double a, double x) {
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-16;
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * kEps)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("chi2_survival: series failed to converge");
}

// Regularized upper incomplete gamma Q(a, x) by the Lentz continued
// fraction, for x >= a + 1.
double gamma_q_cf(double a, double x) {
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("chi2_survival: continued fraction failed to converge");
}

}  // namespace

double chi2_survival(double x, unsigned df) {
    if (df == 0) throw std::invalid_argument("chi2_survival: df must be >= 1");
    if (!(x >= 0.0)) throw std::invalid_argument("chi2_survival: x must be >= 0");
    if (x == 0.0) return 1.0;
    const double a = 0.5 * static_cast<double>(df);
    const double half_x = 0.5 * x;
    double q = (half_x < a + 1.0) ? 1.0 - gamma_p_series(a, half_x) : gamma_q_cf(a, half_x);
    if (q < 0.0) q = 0.0;
    if (q > 1.0) q = 1.0;
    return q;
}

double lrs_pvalue(unsigned W, size_t n) {
    if (W < 1 || static_cast<size_t>(W) >= n)
        throw std::invalid_argument("lrs_pvalue: need 1 <= W < n");
    const double windows = static_cast<double>(n - W + 1);
    const double pairs = windows * (windows - 1.0) / 2.0;
    // 1 - (1 - 2^-W)^pairs via log1p/expm1: exact through W ~ 60 where the
    // direct power would round to 1.
    return -std::expm1(pairs * std::log1p(-std::exp2(-static_cast<double>(W))));
}

}  // namespace qrngkit::sp90b
