#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mixbandit/environments.hpp"
#include "mixbandit/mixing_math.hpp"

using namespace mixbandit;

namespace {

Alphabet binary() { return Alphabet({0.0, 1.0}); }

std::vector<ArmProcess> bernoulli_arms(double p0, double p1, std::uint64_t run_seed) {
    auto a = ArmProcess::iid(binary(), {1.0 - p0, p0}, 201).fresh(run_seed);
    auto b = ArmProcess::iid(binary(), {1.0 - p1, p1}, 202).fresh(run_seed);
    return {a, b};
}

std::vector<BlockReward> mean_rewards(std::size_t count) {
    return std::vector<BlockReward>(count, BlockReward::block_mean());
}

}  // namespace

TEST_CASE("forced optimal play has zero regret") {
    const auto regret = RegretSpec::from_values(RegretKind::RestedBlock, {0.6, 0.4});
    FixedArmPolicy policy(mean_rewards(2), 0, 1, 0);
    auto arms = bernoulli_arms(0.6, 0.4, 5);
    const auto record = run_rested(policy, arms, 500, regret, 5);
    CHECK(record.total_regret == 0.0);
    CHECK(record.pulls[0] == 500);
    CHECK(record.pulls[1] == 0);
}

TEST_CASE("uniform random play pays the average gap") {
    // expected cumulative regret = horizon * (sum_k gap_k) / K
    const auto regret = RegretSpec::from_values(RegretKind::RestedBlock, {0.6, 0.4});
    const long horizon = 1000;
    const int seeds = 200;
    double total = 0.0;
    for (int i = 0; i < seeds; ++i) {
        RandomPolicy policy(mean_rewards(2), 1, 0, 1000 + static_cast<std::uint64_t>(i));
        auto arms = bernoulli_arms(0.6, 0.4, static_cast<std::uint64_t>(i));
        total += run_rested(policy, arms, horizon, regret, static_cast<std::uint64_t>(i)).total_regret;
    }
    const double mean = total / seeds;
    const double expected = static_cast<double>(horizon) * 0.2 / 2.0;
    CHECK(std::abs(mean - expected) <= 0.05 * expected);
}

TEST_CASE("regret decomposes exactly over pull counts") {
    const std::vector<double> values = {0.6, 0.4};
    const auto regret = RegretSpec::from_values(RegretKind::RestedBlock, values);
    ClassicalUcb policy(mean_rewards(2), 2.5, 1, 0);
    auto arms = bernoulli_arms(0.6, 0.4, 7);
    const auto record = run_rested(policy, arms, 2000, regret, 7);
    double expected = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k)
        expected += static_cast<double>(record.pulls[k]) * (regret.optimal - values[k]);
    CHECK(record.total_regret == doctest::Approx(expected).epsilon(1e-12));
    CHECK(record.pulls[0] + record.pulls[1] == 2000);
    // cumulative regret never decreases
    double prev = 0.0;
    for (const auto& step : record.steps) {
        CHECK(step.cum_regret >= prev - 1e-15);
        prev = step.cum_regret;
    }
}

TEST_CASE("block pulls consume the raw stream along the rested skip map") {
    const long m = 2, b = 1;
    const auto regret = RegretSpec::from_values(RegretKind::RestedBlock, {0.6, 0.4});
    const std::vector<MixingProfile> zeros(2, MixingProfile::zero());
    BlockUcb policy(mean_rewards(2), zeros, 2.5, m, b);
    auto arms = bernoulli_arms(0.6, 0.4, 33);
    auto twin = arms[0].clone_reset();  // replays arm 0's exact stream
    const auto record = run_rested(policy, arms, 400, regret, 33);
    const auto stream = twin.emit(arms[0].clock());
    long pull = 0;
    for (const auto& step : record.steps) {
        if (step.arm != 0) continue;
        // the pull's informative symbols sit at the mapped raw positions
        double acc = 0.0;
        for (long j = 1; j <= m; ++j) {
            const long raw = rested_skip_map(m, b, pull * m + j);
            acc += stream[static_cast<std::size_t>(raw - 1)];
        }
        CHECK(step.reward == doctest::Approx(acc / static_cast<double>(m)).epsilon(1e-12));
        ++pull;
    }
    CHECK(pull == record.pulls[0]);
}

TEST_CASE("rested clock conservation") {
    const auto regret = RegretSpec::from_values(RegretKind::RestedBlock, {0.6, 0.4});
    const long horizon = 300;
    for (long b : {0L, 2L}) {
        BlockUcb policy(mean_rewards(2), {MixingProfile::zero(), MixingProfile::zero()}, 2.5, 2, b);
        auto arms = bernoulli_arms(0.6, 0.4, 9);
        run_rested(policy, arms, horizon, regret, 9);
        long total_clock = 0;
        for (const auto& arm : arms) total_clock += arm.clock();
        CHECK(total_clock == horizon * (2 + b));
    }
}

TEST_CASE("restless clocks all advance together") {
    const auto regret = RegretSpec::from_values(RegretKind::Restless, {0.6, 0.4});
    const std::vector<MixingProfile> zeros(2, MixingProfile::zero());
    RestlessUcb policy(mean_rewards(2), zeros, 2.5, {3, 2});
    auto arms = bernoulli_arms(0.6, 0.4, 11);
    const auto record = run_restless(policy, arms, 400, regret, 11);
    long raw_time = 0;
    for (const auto& step : record.steps) raw_time += step.m;
    CHECK(arms[0].clock() == raw_time);
    CHECK(arms[1].clock() == raw_time);
}

TEST_CASE("restless timers audit across two steps") {
    const auto regret = RegretSpec::from_values(RegretKind::Restless, {0.5, 0.5});
    const std::vector<MixingProfile> zeros(2, MixingProfile::zero());
    RestlessUcb policy(mean_rewards(2), zeros, 2.5, {3, 2});
    auto arms = bernoulli_arms(0.5, 0.5, 13);
    const auto record = run_restless(policy, arms, 2, regret, 13);
    // initialization pulls arm 0 (m=3) then arm 1 (m=2)
    CHECK(record.steps[0].arm == 0);
    CHECK(record.steps[1].arm == 1);
    CHECK(record.steps[1].b == 3);  // arm 1 idled while arm 0 played
    CHECK(policy.idle_times()[0] == 2);
    CHECK(policy.idle_times()[1] == 0);
    CHECK(arms[0].clock() == 5);
    CHECK(arms[1].clock() == 5);
}

TEST_CASE("single restless arm never regrets") {
    const auto regret = RegretSpec::from_values(RegretKind::Restless, {0.7});
    RestlessUcb policy({BlockReward::block_mean()}, {MixingProfile::zero()}, 2.5, {2});
    auto arms = std::vector<ArmProcess>{ArmProcess::iid(binary(), {0.3, 0.7}, 301).fresh(15)};
    const auto record = run_restless(policy, arms, 200, regret, 15);
    CHECK(record.total_regret == 0.0);
    CHECK(policy.idle_times()[0] == 0);
}

TEST_CASE("replay determinism") {
    const auto regret = RegretSpec::from_values(RegretKind::RestedBlock, {0.6, 0.4});
    auto run_once = [&] {
        BlockUcb policy(mean_rewards(2), {MixingProfile::zero(), MixingProfile::zero()}, 2.5, 1, 1);
        auto arms = bernoulli_arms(0.6, 0.4, 21);
        return run_rested(policy, arms, 1500, regret, 21);
    };
    const auto first = run_once();
    const auto second = run_once();
    REQUIRE(first.steps.size() == second.steps.size());
    for (std::size_t i = 0; i < first.steps.size(); ++i) {
        CHECK(first.steps[i].arm == second.steps[i].arm);
        CHECK(first.steps[i].reward == second.steps[i].reward);
        CHECK(first.steps[i].cum_regret == second.steps[i].cum_regret);
    }
    CHECK(first.pulls == second.pulls);
}

TEST_CASE("block ucb regret sits under the fixed-geometry bound") {
    // 2 iid bernoulli arms 0.6 vs 0.4 at the stated scale
    const double alpha = 2.5;
    const long horizon = 10'000;
    const std::vector<double> mu = {0.6, 0.4};
    const auto regret = RegretSpec::from_values(RegretKind::RestedBlock, mu);
    const std::vector<MixingProfile> zeros(2, MixingProfile::zero());
    double total = 0.0;
    const int seeds = 50;
    for (int i = 0; i < seeds; ++i) {
        BlockUcb policy(mean_rewards(2), zeros, alpha, 1, 0);
        auto arms = bernoulli_arms(0.6, 0.4, 500 + static_cast<std::uint64_t>(i));
        total += run_rested(policy, arms, horizon, regret, static_cast<std::uint64_t>(i)).total_regret;
    }
    const double mean = total / seeds;
    const double bound = block_ucb_regret_bound(zeros, {1, 0}, {0.0, 0.2}, alpha,
                                                static_cast<double>(horizon));
    CHECK(mean <= bound);
}

TEST_CASE("environment argument validation") {
    const auto regret = RegretSpec::from_values(RegretKind::RestedBlock, {0.5, 0.5});
    ClassicalUcb policy(mean_rewards(2), 2.5, 1, 0);
    auto arms = bernoulli_arms(0.5, 0.5, 1);
    CHECK_THROWS_AS(run_rested(policy, arms, 1, regret, 1), std::invalid_argument);
    auto one_arm = std::vector<ArmProcess>{arms[0]};
    CHECK_THROWS_AS(run_rested(policy, one_arm, 100, regret, 1), std::invalid_argument);
    CHECK_THROWS_AS(RegretSpec::from_values(RegretKind::RestedBlock, {}), std::invalid_argument);
}
