#include "mixbandit/mixing_math.hpp"

#include <cmath>
#include <stdexcept>

namespace mixbandit {

namespace {

void check_geometry(BlockGeometry geom) {
    if (geom.m < 1) throw std::invalid_argument("block geometry: m must be >= 1");
    if (geom.b < 0) throw std::invalid_argument("block geometry: b must be >= 0");
}

bool zero_beyond(const MixingProfile& p, long n) {
    switch (p.kind()) {
        case MixingProfile::Kind::Zero: return true;
        case MixingProfile::Kind::FiniteRange: return n >= p.range();
        case MixingProfile::Kind::Tabulated: return n >= static_cast<long>(p.table().size());
        default: return false;
    }
}

}  // namespace

double lambda_sum(const MixingProfile& profile, BlockGeometry geom, long t) {
    check_geometry(geom);
    if (t < 1) throw std::invalid_argument("lambda_sum: t must be >= 1");
    const long s = geom.s();
    double acc = 0.0;
    for (long r = 1; r <= t; ++r) {
        long arg = kappa_map(geom.m, geom.b, r);
        if (arg < 1) arg = 1;
        acc += profile.phi(arg);
        if (zero_beyond(profile, arg)) break;
        // remaining summands are dominated by tail_sum(arg+1)/s
        if (profile.tail_sum(arg + 1) / static_cast<double>(s) < 1e-15 * (1.0 + acc)) break;
    }
    return 1.0 + 2.0 * acc;
}

double algebraic_lambda_bound(double phi0, double p, BlockGeometry geom, long tau) {
    check_geometry(geom);
    if (!(phi0 >= 0.0)) throw std::invalid_argument("algebraic_lambda_bound: phi0 must be >= 0");
    if (!(p > 1.0)) throw std::invalid_argument("algebraic_lambda_bound: p must be > 1");
    if (geom.b < 1) throw std::invalid_argument("algebraic_lambda_bound: b must be >= 1");
    const double s = static_cast<double>(geom.s());
    const double last = static_cast<double>(tau) * s - static_cast<double>(geom.m);
    if (!(last > 0.0)) throw std::invalid_argument("algebraic_lambda_bound: need tau*s > m");
    const double head = 1.0 + 2.0 * phi0;
    const double scale = 2.0 * phi0 / (s * (p - 1.0));
    const double span = std::pow(static_cast<double>(geom.b), 1.0 - p) - std::pow(last, 1.0 - p);
    return head + scale * span;
}

double m_sum(const MixingProfile& profile, long b) {
    if (b < 0) throw std::invalid_argument("m_sum: b must be >= 0");
    if (!profile.summable()) throw std::domain_error("m_sum: profile is not summable");
    if (b == 0) b = 1;  // phi(0) is undefined
    switch (profile.kind()) {
        case MixingProfile::Kind::Zero:
            return 1.0;
        case MixingProfile::Kind::FiniteRange: {
            // arguments b(i+1) <= n0  <=>  i+1 <= n0/b
            const long count = profile.range() / b - 1;
            return 1.0 + (count > 0 ? profile.cap() * static_cast<double>(count) : 0.0);
        }
        case MixingProfile::Kind::Tabulated: {
            double acc = 0.0;
            for (long j = 2; j * b <= static_cast<long>(profile.table().size()); ++j)
                acc += profile.phi(j * b);
            return 1.0 + acc;
        }
        case MixingProfile::Kind::Geometric: {
            const double c = profile.coef();
            const double rho = profile.rate();
            if (c == 0.0 || rho == 0.0) return 1.0;
            const double step = std::pow(rho, static_cast<double>(b));
            long j = 2;
            double clamped = 0.0;
            while (c * std::pow(rho, static_cast<double>(j * b)) >= 1.0) {
                clamped += 1.0;
                ++j;
            }
            return 1.0 + clamped + c * std::pow(rho, static_cast<double>(j * b)) / (1.0 - step);
        }
        case MixingProfile::Kind::Algebraic: {
            const double phi0 = profile.coef();
            const double p = profile.rate();
            long j = 2;
            double clamped = 0.0;
            while (profile.phi(j * b) >= 1.0) {
                clamped += 1.0;
                ++j;
            }
            // phi0 * b^-p * sum_{i >= j} i^-p, summed directly with an
            // Euler-Maclaurin remainder past the pivot
            const double bp = phi0 * std::pow(static_cast<double>(b), -p);
            const long pivot = j > 2000 ? j : 2000;
            double head = 0.0;
            for (long i = j; i < pivot; ++i) head += std::pow(static_cast<double>(i), -p);
            const double x = static_cast<double>(pivot);
            double rem = std::pow(x, 1.0 - p) / (p - 1.0) + 0.5 * std::pow(x, -p) +
                         p / 12.0 * std::pow(x, -p - 1.0);
            return 1.0 + clamped + bp * (head + rem);
        }
    }
    return 1.0;
}

double restless_m_sum(const MixingProfile& profile, long b) {
    if (b < 0) throw std::invalid_argument("restless_m_sum: b must be >= 0");
    if (!profile.summable()) throw std::domain_error("restless_m_sum: profile is not summable");
    if (b == 0) b = 1;
    return 1.0 + profile.tail_sum(b);
}

long rested_skip_map(long m, long b, long t) {
    if (m < 1 || b < 0 || t < 1) throw std::invalid_argument("rested_skip_map: bad arguments");
    return t + b * ((t - 1) / m);
}

long restless_skip_map(long m, long b, long t) {
    if (m < 1 || b < 0 || t < 1) throw std::invalid_argument("restless_skip_map: bad arguments");
    return t + (t >= m + 1 ? b : 0);
}

long kappa_map(long m, long b, long q) {
    if (m < 1 || b < 0 || q < 1) throw std::invalid_argument("kappa_map: bad arguments");
    return q * b + (q - 1) * m;
}

long divisor_weight(long s) {
    if (s < 1) throw std::invalid_argument("divisor_weight: s must be >= 1");
    long acc = 0;
    for (long i = 1; i <= s; ++i)
        if (s % i == 0) acc += i;
    return acc;
}

double solve_uk(const MixingProfile& profile, BlockGeometry geom, double delta,
                double alpha, double tau) {
    check_geometry(geom);
    if (!(delta > 0.0)) throw std::invalid_argument("solve_uk: delta must be > 0");
    if (!(alpha > 2.0)) throw std::invalid_argument("solve_uk: alpha must be > 2");
    if (!(tau > 1.0)) throw std::invalid_argument("solve_uk: need log(tau) > 0");
    if (!profile.summable()) throw std::domain_error("solve_uk: profile is not summable");

    const double scale = 8.0 * alpha * std::log(tau) / (delta * delta);
    const long s = geom.s();
    constexpr long kCap = 200'000'000;

    // Lambda(ceil(u)) is a nondecreasing step function, so on (n-1, n] the
    // defining equation reads u * delta^2 = 8 alpha Lambda(n)^2 log tau.
    // Walk n upward, accumulating Lambda incrementally, until the candidate
    // root scale * Lambda(n)^2 falls into (n-1, n]; the first such candidate
    // is the smallest root and has zero residual by construction.
    double acc = 0.0;       // sum of phi terms so far
    bool frozen = false;    // no further term can change Lambda measurably
    for (long n = 1; n <= kCap; ++n) {
        if (!frozen) {
            long arg = kappa_map(geom.m, geom.b, n);
            if (arg < 1) arg = 1;
            acc += profile.phi(arg);
            if (zero_beyond(profile, arg) ||
                profile.tail_sum(arg + 1) / static_cast<double>(s) < 1e-14 * (1.0 + acc)) {
                frozen = true;
            }
        }
        const double lam = 1.0 + 2.0 * acc;
        const double candidate = scale * lam * lam;
        if (candidate <= static_cast<double>(n)) return candidate;
        if (frozen) return candidate;  // Lambda is constant from here on
    }
    throw std::domain_error("solve_uk: no root below cap; regret bound is unbounded");
}

double MonotoneMap::inverse(double y) const {
    if (inv) return inv(y);
    double lo = 1e-12, hi = 1e12;
    // the map is increasing; plain bisection
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (fwd(mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double generic_regret_bound(const MonotoneMap& theta, const MonotoneMap& gamma,
                            const std::vector<double>& gaps, double alpha, double tau) {
    if (!(alpha > 2.0)) throw std::invalid_argument("generic_regret_bound: alpha must be > 2");
    if (!(tau > 1.0)) throw std::invalid_argument("generic_regret_bound: need log(tau) > 0");
    const double logt = std::log(tau);
    double acc = 0.0;
    for (double gap : gaps) {
        if (!(gap > 0.0)) throw std::invalid_argument("generic_regret_bound: gaps must be > 0");
        const double pulls = theta.inverse(alpha * logt / gamma(gap / 2.0));
        acc += std::ceil(pulls) * gap + 1.0 / (alpha - 2.0);
    }
    return acc;
}

double block_ucb_regret_bound(const std::vector<MixingProfile>& profiles,
                              BlockGeometry geom, const std::vector<double>& gaps,
                              double alpha, double tau) {
    if (profiles.size() != gaps.size())
        throw std::invalid_argument("block_ucb_regret_bound: profiles/gaps size mismatch");
    double acc = 0.0;
    for (std::size_t k = 0; k < gaps.size(); ++k) {
        if (gaps[k] <= 0.0) continue;
        acc += solve_uk(profiles[k], geom, gaps[k], alpha, tau) * gaps[k] + 1.0 / (alpha - 2.0);
    }
    return acc;
}

double combo_regret_bound(long s, const std::vector<double>& gaps, double alpha, double t) {
    if (!(alpha > 2.0)) throw std::invalid_argument("combo_regret_bound: alpha must be > 2");
    const double logt = std::log(t);
    const double eta = static_cast<double>(divisor_weight(s));
    double acc = 0.0;
    for (double gap : gaps) {
        if (gap <= 0.0) continue;
        acc += (1.0 + eta) * gap + 8.0 * alpha * static_cast<double>(s) * logt / gap;
    }
    return acc;
}

double restless_regret_bound(const std::vector<double>& gaps, double alpha, double t) {
    if (!(alpha > 2.0)) throw std::invalid_argument("restless_regret_bound: alpha must be > 2");
    const double logt = std::log(t);
    double acc = 0.0;
    for (double gap : gaps) {
        if (gap <= 0.0) continue;
        acc += gap + 8.0 * alpha * logt / gap;
    }
    return acc;
}

}  // namespace mixbandit
