#pragma once

#include <vector>

// Small statistics kit used by the verification harness.

namespace mixbandit {

// Wilson score interval endpoints for k successes out of n at normal
// quantile z.
double wilson_upper(long k, long n, double z);
double wilson_lower(long k, long n, double z);

// Wilson-Hilferty approximation to the chi-square quantile.
double chi_square_quantile(long df, double z);

struct ChiSquareResult {
    double statistic;
    long df;
    double threshold;
    bool pass;
};

// Two-sample chi-square homogeneity test on equal-length count vectors at
// the normal quantile z (e.g. 3.0902 for significance 1e-3).
ChiSquareResult two_sample_chi_square(const std::vector<long>& a, const std::vector<long>& b,
                                      double z);

// P(|S/n - p| > eps) for S ~ Binomial(n, p), summed exactly; the comparison
// uses the same floating-point expression as the empirical counter.
double binomial_two_sided_tail(long n, double p, double eps);

}  // namespace mixbandit
