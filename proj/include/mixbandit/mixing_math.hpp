#pragma once

#include <functional>
#include <vector>

#include "mixbandit/mixing_profile.hpp"

// Numeric layer shared by the policies and the verification harness:
// coefficient tail sums, index-skipping maps, and the confidence-width
// root solve that drives the rested regret bound.

namespace mixbandit {

struct BlockGeometry {
    long m = 1;  // informative symbols per block
    long b = 0;  // ignored symbols per block

    long s() const { return m + b; }
};

// Lambda(t) = 1 + 2 sum_{r=1..t} phi(r*b + (r-1)*m).
// The argument is clamped to >= 1 so that b = 0 stays well defined.
double lambda_sum(const MixingProfile& profile, BlockGeometry geom, long t);

// Closed-form upper bound on Lambda(tau) for phi(n) = phi0 * n^-p:
// 1 + 2 phi0 + 2 phi0 / (s (p-1)) * (b^(1-p) - (tau s - m)^(1-p)).
double algebraic_lambda_bound(double phi0, double p, BlockGeometry geom, long tau);

// M(b) = 1 + sum_{i>=1} phi(b(i+1)).  b = 0 is treated as b = 1 because
// phi is only defined on positive separations.
double m_sum(const MixingProfile& profile, long b);

// Restless tail sum: 1 + sum_{i>=b} phi(i), with the same b = 0 convention.
double restless_m_sum(const MixingProfile& profile, long b);

// Raw-stream index of the t-th retained observation when every m kept
// symbols are followed by b ignored ones: t + b*floor((t-1)/m).
long rested_skip_map(long m, long b, long t);

// Restless variant: indices 1..m unshifted, all later ones shifted once by b.
long restless_skip_map(long m, long b, long t);

// Separation seen by the block subsequence: kappa(q) = q*b + (q-1)*m.
long kappa_map(long m, long b, long q);

// Sum of the divisors of s; counts the (m,b) decompositions weighted by m.
long divisor_weight(long s);

// Smallest positive u with u * delta^2 = 8 alpha Lambda(ceil(u))^2 log(tau).
// Throws std::domain_error if no root exists below an internal cap.
double solve_uk(const MixingProfile& profile, BlockGeometry geom, double delta,
                double alpha, double tau);

// Increasing map with an optional registered inverse; without one the
// inverse is computed by bisection on [1e-12, 1e12].
struct MonotoneMap {
    std::function<double(double)> fwd;
    std::function<double(double)> inv;  // may be empty

    double operator()(double x) const { return fwd(x); }
    double inverse(double y) const;
};

// Generic (alpha, theta, gamma)-UCB regret bound:
// sum_k ceil(theta^-1(alpha log(tau) / gamma(delta_k / 2))) * delta_k + 1/(alpha-2).
double generic_regret_bound(const MonotoneMap& theta, const MonotoneMap& gamma,
                            const std::vector<double>& gaps, double alpha, double tau);

// Concrete bounds used by the experiment harness (sums run over the
// suboptimal arms, i.e. over strictly positive gaps).

// sum_k u_k delta_k + 1/(alpha-2) with u_k from solve_uk.
double block_ucb_regret_bound(const std::vector<MixingProfile>& profiles,
                              BlockGeometry geom, const std::vector<double>& gaps,
                              double alpha, double tau);

// sum_k (1 + eta(s)) delta_k + 8 alpha s log(t) / delta_k.
double combo_regret_bound(long s, const std::vector<double>& gaps, double alpha, double t);

// sum_k delta_k + 8 alpha log(t) / delta_k.
double restless_regret_bound(const std::vector<double>& gaps, double alpha, double t);

}  // namespace mixbandit
