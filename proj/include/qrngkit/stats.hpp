#pragma once

#include <cstddef>
#include <cstdint>

namespace qrngkit::sp90b {

/// Binary Shannon entropy H2(mcv/n) in bits/bit. 1 at mcv = n/2, strictly
/// decreasing in mcv, 0 at mcv = n. Requires n/2 <= mcv <= n.
double binary_min_entropy(uint64_t mcv, uint64_t n);

/// Exact two-sided binomial tail min(1, 2 * P(X >= mcv)) for
/// X ~ Binomial(n, 1/2), summed term-by-term in log space (no normal
/// approximation). Requires n/2 <= mcv <= n.
double binomial_mcv_pvalue(uint64_t mcv, uint64_t n);

/// Chi-square survival function: regularized upper incomplete gamma
/// Q(df/2, x/2), by series for x < df + 1 and continued fraction otherwise.
/// Accurate to better than 1e-8 relative for df <= 64, x <= 200.
/// Requires x >= 0 and df >= 1.
double chi2_survival(double x, unsigned df);

/// Probability that some pair of length-W windows of n IID fair bits
/// collide: 1 - (1 - 2^-W)^C(n-W+1, 2). Strictly decreasing in W.
/// Requires 1 <= W < n.
double lrs_pvalue(unsigned W, size_t n);

}  // namespace qrngkit::sp90b
