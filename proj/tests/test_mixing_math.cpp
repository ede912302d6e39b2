#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mixbandit/mixing_math.hpp"
#include "mixbandit/rng.hpp"

using namespace mixbandit;

namespace {

// plain reference summation of the tail-sum definitions
double lambda_brute(const MixingProfile& p, long m, long b, long t) {
    double acc = 0.0;
    for (long r = 1; r <= t; ++r) {
        long arg = r * b + (r - 1) * m;
        if (arg < 1) arg = 1;
        acc += p.phi(arg);
    }
    return 1.0 + 2.0 * acc;
}

double m_sum_brute(const MixingProfile& p, long b, long terms) {
    if (b == 0) b = 1;
    double acc = 0.0;
    for (long i = 1; i <= terms; ++i) acc += p.phi(b * (i + 1));
    return 1.0 + acc;
}

}  // namespace

TEST_CASE("profile phi shapes") {
    const auto zero = MixingProfile::zero();
    CHECK(zero.phi(1) == 0.0);
    CHECK(zero.phi(1000) == 0.0);

    const auto fr = MixingProfile::finite_range(3, 0.5);
    CHECK(fr.phi(1) == 0.5);
    CHECK(fr.phi(3) == 0.5);
    CHECK(fr.phi(4) == 0.0);

    const auto geo = MixingProfile::geometric(1.0, 0.5);
    CHECK(geo.phi(1) == doctest::Approx(0.5));
    CHECK(geo.phi(3) == doctest::Approx(0.125));

    const auto alg = MixingProfile::algebraic(2.0, 2.0);
    CHECK(alg.phi(1) == 1.0);  // clamped
    CHECK(alg.phi(2) == doctest::Approx(0.5));

    const auto tab = MixingProfile::tabulated({0.4, 0.2, 0.1});
    CHECK(tab.phi(1) == 0.4);
    CHECK(tab.phi(2) == 0.2);
    CHECK(tab.phi(3) == 0.1);
    CHECK(tab.phi(4) == 0.0);
}

TEST_CASE("profile phi is nonincreasing and in range") {
    const std::vector<MixingProfile> profiles = {
        MixingProfile::zero(),           MixingProfile::finite_range(5, 0.7),
        MixingProfile::geometric(2.0, 0.8), MixingProfile::algebraic(1.5, 1.5),
        MixingProfile::tabulated({0.9, 0.5, 0.5, 0.1}),
    };
    for (const auto& p : profiles) {
        double prev = 1.0;
        for (long n = 1; n <= 200; ++n) {
            const double v = p.phi(n);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            CHECK(v <= prev + 1e-15);
            prev = v;
        }
    }
}

TEST_CASE("profile tail sums match brute force") {
    const std::vector<MixingProfile> profiles = {
        MixingProfile::finite_range(7, 0.3),
        MixingProfile::geometric(1.0, 0.6),
        MixingProfile::geometric(3.0, 0.5),  // clamped head
        MixingProfile::algebraic(1.0, 2.0),
        MixingProfile::tabulated({0.8, 0.4, 0.2, 0.2}),
    };
    for (const auto& p : profiles) {
        for (long n : {1L, 2L, 5L, 11L}) {
            const long cutoff = 200'000;
            double brute = 0.0;
            for (long i = n; i <= cutoff; ++i) brute += p.phi(i);
            // integral bound on what the truncated reference is missing
            double remainder = 1e-12;
            if (p.kind() == MixingProfile::Kind::Algebraic)
                remainder += p.coef() * std::pow(static_cast<double>(cutoff), 1.0 - p.rate()) /
                             (p.rate() - 1.0);
            CHECK(p.tail_sum(n) >= brute - 1e-9);
            CHECK(p.tail_sum(n) <= brute + remainder + 1e-9);
        }
    }
}

TEST_CASE("lambda_sum frozen examples") {
    // zero profile: the independent case collapses to 1
    CHECK(lambda_sum(MixingProfile::zero(), {3, 2}, 100) == 1.0);
    CHECK(lambda_sum(MixingProfile::zero(), {1, 0}, 1) == 1.0);

    // finite range: arguments 1,3,5,7,9 with phi = .5,.5,0,0,0
    CHECK(lambda_sum(MixingProfile::finite_range(3, 0.5), {1, 1}, 5) == doctest::Approx(3.0));

    // geometric: 1 + 2(phi(1) + phi(3)) = 1 + 2(0.5 + 0.125)
    CHECK(lambda_sum(MixingProfile::geometric(1.0, 0.5), {1, 1}, 2) == doctest::Approx(2.25));
}

TEST_CASE("lambda_sum is monotone, >= 1, and matches brute force") {
    const std::vector<MixingProfile> profiles = {
        MixingProfile::zero(),
        MixingProfile::finite_range(4, 0.9),
        MixingProfile::geometric(1.0, 0.7),
        MixingProfile::algebraic(1.0, 1.5),
    };
    for (const auto& p : profiles) {
        for (long m : {1L, 2L, 5L}) {
            for (long b : {0L, 1L, 3L}) {
                double prev = 1.0;
                for (long t = 1; t <= 60; ++t) {
                    const double lam = lambda_sum(p, {m, b}, t);
                    CHECK(lam >= 1.0);
                    CHECK(lam >= prev - 1e-12);
                    CHECK(lam == doctest::Approx(lambda_brute(p, m, b, t)).epsilon(1e-10));
                    prev = lam;
                }
            }
        }
    }
}

TEST_CASE("lambda summands evaluate phi exactly at kappa") {
    // r-th summand argument == kappa(r) for randomized geometry
    std::uint64_t ctr = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const long m = 1 + static_cast<long>(counter_bits(99, ctr++) % 6);
        const long b = static_cast<long>(counter_bits(99, ctr++) % 5);
        for (long r = 1; r <= 10'000; r += 97)
            CHECK(kappa_map(m, b, r) == r * b + (r - 1) * m);
    }
}

TEST_CASE("algebraic bound frozen example and limits") {
    // phi0=1, p=2, m=1, b=1, tau=10 -> 3 + 18/19
    CHECK(algebraic_lambda_bound(1.0, 2.0, {1, 1}, 10) ==
          doctest::Approx(3.0 + 18.0 / 19.0).epsilon(1e-12));
    // no dependence
    CHECK(algebraic_lambda_bound(0.0, 2.0, {1, 1}, 10) == doctest::Approx(1.0));
    CHECK_THROWS_AS(algebraic_lambda_bound(1.0, 2.0, {1, 0}, 10), std::invalid_argument);
}

TEST_CASE("algebraic bound dominates the direct summation") {
    for (double p : {1.5, 2.0, 3.0}) {
        for (long b = 1; b <= 5; ++b) {
            for (long tau : {10L, 100L, 1000L}) {
                for (long m : {1L, 2L, 3L}) {
                    for (double phi0 : {0.5, 1.0, 2.0}) {
                        const auto profile = MixingProfile::algebraic(phi0, p);
                        const double bound = algebraic_lambda_bound(phi0, p, {m, b}, tau);
                        const double direct = lambda_sum(profile, {m, b}, tau);
                        CHECK(bound >= direct - 1e-12);
                    }
                }
            }
        }
    }
}

TEST_CASE("m_sum frozen examples") {
    CHECK(m_sum(MixingProfile::zero(), 3) == 1.0);
    // geometric closed form: 1 + rho^(2b) / (1 - rho^b)
    CHECK(m_sum(MixingProfile::geometric(1.0, 0.5), 1) == doctest::Approx(1.5));
    CHECK(m_sum(MixingProfile::finite_range(2, 0.3), 1) == doctest::Approx(1.3));
}

TEST_CASE("restless_m_sum frozen examples") {
    CHECK(restless_m_sum(MixingProfile::zero(), 1) == 1.0);
    CHECK(restless_m_sum(MixingProfile::geometric(1.0, 0.5), 2) == doctest::Approx(1.5));
    CHECK(restless_m_sum(MixingProfile::finite_range(3, 0.2), 5) == 1.0);
}

TEST_CASE("m sums match partial summation and are nonincreasing in b") {
    const std::vector<MixingProfile> profiles = {
        MixingProfile::finite_range(9, 0.4),
        MixingProfile::geometric(1.0, 0.8),
        MixingProfile::algebraic(0.7, 2.5),
        MixingProfile::tabulated({0.6, 0.6, 0.3}),
    };
    for (const auto& p : profiles) {
        double prev_m = 1e300, prev_r = 1e300;
        for (long b = 0; b <= 12; ++b) {
            const double ms = m_sum(p, b);
            const double rs = restless_m_sum(p, b);
            CHECK(ms >= 1.0);
            CHECK(rs >= 1.0);
            if (b >= 1) {
                CHECK(ms <= prev_m + 1e-12);
                CHECK(rs <= prev_r + 1e-12);
                CHECK(rs <= restless_m_sum(p, 1) + 1e-12);
                CHECK(ms == doctest::Approx(m_sum_brute(p, b, 500'000)).epsilon(1e-8));
            }
            prev_m = ms;
            prev_r = rs;
        }
        // b = 0 is the b = 1 value by convention
        CHECK(m_sum(p, 0) == m_sum(p, 1));
        CHECK(restless_m_sum(p, 0) == restless_m_sum(p, 1));
    }
}

TEST_CASE("skip maps frozen examples") {
    // rested
    const std::vector<long> expect21 = {1, 2, 4, 5, 7};
    for (long t = 1; t <= 5; ++t) CHECK(rested_skip_map(2, 1, t) == expect21[t - 1]);
    const std::vector<long> expect12 = {1, 4, 7};
    for (long t = 1; t <= 3; ++t) CHECK(rested_skip_map(1, 2, t) == expect12[t - 1]);
    for (long t = 1; t <= 100; ++t) CHECK(rested_skip_map(3, 0, t) == t);

    // restless
    CHECK(restless_skip_map(2, 3, 1) == 1);
    CHECK(restless_skip_map(2, 3, 2) == 2);
    CHECK(restless_skip_map(2, 3, 3) == 6);
    CHECK(restless_skip_map(2, 3, 4) == 7);
    CHECK(restless_skip_map(1, 1, 1) == 1);
    CHECK(restless_skip_map(1, 1, 2) == 3);
    CHECK(restless_skip_map(1, 1, 3) == 4);
    for (long t = 1; t <= 100; ++t) CHECK(restless_skip_map(4, 0, t) == t);
}

TEST_CASE("rested skip map image is runs of m consecutive integers") {
    for (long m : {1L, 2L, 3L, 7L}) {
        for (long b : {0L, 1L, 4L}) {
            for (long block = 0; block < 1000; ++block) {
                const long start = rested_skip_map(m, b, block * m + 1);
                const long end = rested_skip_map(m, b, (block + 1) * m);
                CHECK(end - start == m - 1);
                for (long j = 1; j < m; ++j)
                    CHECK(rested_skip_map(m, b, block * m + 1 + j) == start + j);
                if (block > 0) {
                    const long prev_start = rested_skip_map(m, b, (block - 1) * m + 1);
                    CHECK(start - prev_start == m + b);
                }
            }
        }
    }
}

TEST_CASE("kappa frozen examples") {
    CHECK(kappa_map(2, 1, 1) == 1);
    CHECK(kappa_map(2, 1, 2) == 4);
    CHECK(kappa_map(2, 1, 3) == 7);
    CHECK(kappa_map(3, 2, 2) == 7);
    for (long q = 1; q <= 50; ++q) CHECK(kappa_map(1, 0, q) == q - 1);
}

TEST_CASE("divisor weight") {
    CHECK(divisor_weight(1) == 1);
    CHECK(divisor_weight(6) == 12);
    CHECK(divisor_weight(12) == 28);
    for (long s = 1; s <= 10'000; ++s) {
        long brute = 0;
        for (long i = 1; i <= s; ++i)
            if (s % i == 0) brute += i;
        CHECK(divisor_weight(s) == brute);
    }
}

TEST_CASE("solve_uk closed forms with zero profile") {
    const auto zero = MixingProfile::zero();
    const double e = std::exp(1.0);
    CHECK(solve_uk(zero, {1, 0}, 1.0, 3.0, e) == doctest::Approx(24.0).epsilon(1e-12));
    CHECK(solve_uk(zero, {1, 0}, 2.0, 3.0, e) == doctest::Approx(6.0).epsilon(1e-12));
    // finite-range profile keeps Lambda >= 1, so u >= the independent value
    const auto fr = MixingProfile::finite_range(4, 0.6);
    CHECK(solve_uk(fr, {1, 1}, 0.5, 2.5, 100.0) >=
          8.0 * 2.5 * std::log(100.0) / 0.25 - 1e-9);
}

TEST_CASE("solve_uk residual is tiny across profiles") {
    const std::vector<MixingProfile> profiles = {
        MixingProfile::zero(),
        MixingProfile::finite_range(6, 0.8),
        MixingProfile::geometric(1.0, 0.7),
        MixingProfile::geometric(0.4, 0.95),
        MixingProfile::algebraic(1.0, 1.5),
    };
    for (const auto& p : profiles) {
        for (double delta : {0.05, 0.2, 0.7, 2.0}) {
            for (double alpha : {2.1, 3.0, 5.0}) {
                for (double tau : {10.0, 1000.0, 100000.0}) {
                    const BlockGeometry geom{2, 1};
                    const double u = solve_uk(p, geom, delta, alpha, tau);
                    CHECK(u > 0.0);
                    const long ceil_u = static_cast<long>(std::ceil(u));
                    const double lam = lambda_sum(p, geom, std::max<long>(ceil_u, 1));
                    const double lhs = u * delta * delta;
                    const double rhs = 8.0 * alpha * lam * lam * std::log(tau);
                    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, lhs));
                }
            }
        }
    }
}

TEST_CASE("generic regret bound closed example") {
    MonotoneMap theta{[](double x) { return x; }, [](double y) { return y; }};
    MonotoneMap gamma{[](double e) { return e * e / 2.0; },
                      [](double y) { return std::sqrt(2.0 * y); }};
    // alpha=3, log tau = 1, delta = 0.5 -> ceil(3 / 0.03125)*0.5 + 1 = 49
    const double bound = generic_regret_bound(theta, gamma, {0.5}, 3.0, std::exp(1.0));
    CHECK(bound == doctest::Approx(49.0).epsilon(1e-9));
    CHECK(generic_regret_bound(theta, gamma, {}, 3.0, 10.0) == 0.0);
}

TEST_CASE("monotone map bisection inverse") {
    MonotoneMap cube{[](double x) { return x * x * x; }, nullptr};
    CHECK(cube.inverse(27.0) == doctest::Approx(3.0).epsilon(1e-8));
    MonotoneMap with_inv{[](double x) { return 2.0 * x; }, [](double y) { return y / 2.0; }};
    CHECK(with_inv.inverse(10.0) == 5.0);
}

TEST_CASE("concrete regret bounds") {
    const std::vector<MixingProfile> profiles = {MixingProfile::zero(), MixingProfile::zero()};
    // one suboptimal arm with gap 1, alpha 3, log tau = 1: 24*1 + 1/(3-2)
    const double b = block_ucb_regret_bound(profiles, {1, 0}, {0.0, 1.0}, 3.0, std::exp(1.0));
    CHECK(b == doctest::Approx(25.0).epsilon(1e-9));
    // combo: (1+eta(4))*gap + 8*alpha*s*log(t)/gap, eta(4)=7
    const double c = combo_regret_bound(4, {0.0, 2.0}, 2.5, std::exp(1.0));
    CHECK(c == doctest::Approx(8.0 * 2.0 + 8.0 * 2.5 * 4.0 / 2.0).epsilon(1e-9));
    // restless: gap + 8*alpha*log(t)/gap
    const double r = restless_regret_bound({0.0, 0.5}, 2.5, std::exp(1.0));
    CHECK(r == doctest::Approx(0.5 + 8.0 * 2.5 / 0.5).epsilon(1e-9));
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(lambda_sum(MixingProfile::zero(), {0, 1}, 5), std::invalid_argument);
    CHECK_THROWS_AS(lambda_sum(MixingProfile::zero(), {1, 1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(m_sum(MixingProfile::zero(), -1), std::invalid_argument);
    CHECK_THROWS_AS(solve_uk(MixingProfile::zero(), {1, 0}, 0.0, 3.0, 10.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_uk(MixingProfile::zero(), {1, 0}, 1.0, 2.0, 10.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_uk(MixingProfile::zero(), {1, 0}, 1.0, 3.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(divisor_weight(0), std::invalid_argument);
    CHECK_THROWS_AS(MixingProfile::geometric(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(MixingProfile::algebraic(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(MixingProfile::tabulated({0.2, 0.5}), std::invalid_argument);
}
