#include "mixbandit/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace mixbandit {

namespace {

double wilson_center_radius(long k, long n, double z, int sign) {
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(k) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = phat + z2 / (2.0 * nn);
    const double radius = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn));
    return (center + sign * radius) / denom;
}

}  // namespace

double wilson_upper(long k, long n, double z) {
    if (n < 1) throw std::invalid_argument("wilson: n must be >= 1");
    return std::min(1.0, wilson_center_radius(k, n, z, +1));
}

double wilson_lower(long k, long n, double z) {
    if (n < 1) throw std::invalid_argument("wilson: n must be >= 1");
    return std::max(0.0, wilson_center_radius(k, n, z, -1));
}

double chi_square_quantile(long df, double z) {
    if (df < 1) throw std::invalid_argument("chi_square_quantile: df must be >= 1");
    const double d = static_cast<double>(df);
    const double a = 2.0 / (9.0 * d);
    const double base = 1.0 - a + z * std::sqrt(a);
    return d * base * base * base;
}

ChiSquareResult two_sample_chi_square(const std::vector<long>& a, const std::vector<long>& b,
                                      double z) {
    if (a.size() != b.size()) throw std::invalid_argument("chi_square: histograms must match");
    double stat = 0.0;
    long cells = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double total = static_cast<double>(a[i] + b[i]);
        if (total == 0.0) continue;
        ++cells;
        const double diff = static_cast<double>(a[i] - b[i]);
        stat += diff * diff / total;
    }
    const long df = cells > 1 ? cells - 1 : 1;
    const double threshold = chi_square_quantile(df, z);
    return {stat, df, threshold, stat <= threshold};
}

double binomial_two_sided_tail(long n, double p, double eps) {
    if (n < 1) throw std::invalid_argument("binomial tail: n must be >= 1");
    const double nn = static_cast<double>(n);
    double acc = 0.0;
    for (long s = 0; s <= n; ++s) {
        const double frequency = static_cast<double>(s) / nn;
        if (!(std::abs(frequency - p) > eps)) continue;
        const double logpmf = std::lgamma(nn + 1.0) - std::lgamma(static_cast<double>(s) + 1.0) -
                              std::lgamma(nn - static_cast<double>(s) + 1.0) +
                              static_cast<double>(s) * std::log(p) +
                              (nn - static_cast<double>(s)) * std::log1p(-p);
        acc += std::exp(logpmf);
    }
    return acc;
}

}  // namespace mixbandit
