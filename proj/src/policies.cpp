#include "mixbandit/policies.hpp"

#include <cmath>
#include <stdexcept>

#include "mixbandit/rng.hpp"

namespace mixbandit {

double classical_ucb_index(double mean, double alpha, double log_t, long tau) {
    return mean + std::sqrt(2.0 * alpha * log_t / static_cast<double>(tau));
}

double block_ucb_index(double mean, double lambda, double alpha, double log_t, long tau) {
    return mean + lambda * std::sqrt(2.0 * alpha * log_t / static_cast<double>(tau));
}

double restless_ucb_index(double mean, double alpha, double log_t, long tau, double msum) {
    return mean + std::sqrt(2.0 * alpha * log_t / (static_cast<double>(tau) * msum * msum));
}

double combo_ucb_index(double estimate, long beta, long mb, long s, double alpha, double log_t,
                       long tau) {
    const double bonus = std::sqrt(2.0 * alpha * static_cast<double>(mb) * log_t /
                                   (static_cast<double>(s) * static_cast<double>(tau)));
    return static_cast<double>(beta) * (estimate + bonus);
}

std::vector<ComboGeometry> combo_decompositions(long s) {
    if (s < 1) throw std::invalid_argument("combo_decompositions: s must be >= 1");
    std::vector<ComboGeometry> out;
    for (long d = 1; d <= s; ++d) {
        if (s % d != 0) continue;
        for (long m = 1; m <= d; ++m) out.push_back({m, d - m, s / d});
    }
    return out;
}

Policy::Policy(std::vector<BlockReward> rewards, double alpha)
    : rewards_(std::move(rewards)), alpha_(alpha) {
    if (rewards_.empty()) throw std::invalid_argument("policy: need at least one arm");
    tau_.assign(rewards_.size(), 0);
    sum_.assign(rewards_.size(), 0.0);
}

double Policy::mean(int arm) const {
    const auto k = static_cast<std::size_t>(arm);
    return tau_[k] > 0 ? sum_[k] / static_cast<double>(tau_[k]) : 0.0;
}

int Policy::select(long t) {
    for (int k = 0; k < num_arms(); ++k)
        if (tau_[static_cast<std::size_t>(k)] == 0) return k;
    int best = 0;
    double best_index = index_of(0, t);
    for (int k = 1; k < num_arms(); ++k) {
        const double idx = index_of(k, t);
        if (idx > best_index) {
            best = k;
            best_index = idx;
        }
    }
    return best;
}

std::vector<double> Policy::estimates() const {
    std::vector<double> out(rewards_.size());
    for (int k = 0; k < num_arms(); ++k) out[static_cast<std::size_t>(k)] = mean(k);
    return out;
}

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 2.0)) throw std::invalid_argument("policy: alpha must be > 2");
}

void check_geometry_args(long m, long b) {
    if (m < 1) throw std::invalid_argument("policy: m must be >= 1");
    if (b < 0) throw std::invalid_argument("policy: b must be >= 0");
}

double block_reward(const BlockReward& reward, std::span<const double> raw, long m) {
    if (static_cast<long>(raw.size()) < m)
        throw std::invalid_argument("policy: pull returned fewer symbols than the block length");
    return reward.evaluate(raw.subspan(0, static_cast<std::size_t>(m)));
}

}  // namespace

ClassicalUcb::ClassicalUcb(std::vector<BlockReward> rewards, double alpha, long m, long b)
    : Policy(std::move(rewards), alpha), geom_{m, b} {
    check_alpha(alpha);
    check_geometry_args(m, b);
}

PullOutcome ClassicalUcb::update(int arm, std::span<const double> raw, long) {
    const auto k = static_cast<std::size_t>(arm);
    const double value = block_reward(rewards_[k], raw, geom_.m);
    sum_[k] += value;
    ++tau_[k];
    return {arm, geom_.m, geom_.b, value};
}

double ClassicalUcb::index_of(int arm, long t) const {
    return classical_ucb_index(mean(arm), alpha_, std::log(static_cast<double>(t)),
                               tau_[static_cast<std::size_t>(arm)]);
}

BlockUcb::BlockUcb(std::vector<BlockReward> rewards, std::vector<MixingProfile> profiles,
                   double alpha, long m, long b)
    : Policy(std::move(rewards), alpha), geom_{m, b}, profiles_(std::move(profiles)) {
    check_alpha(alpha);
    check_geometry_args(m, b);
    if (profiles_.size() != rewards_.size())
        throw std::invalid_argument("block ucb: one profile per arm required");
    lambda_.assign(profiles_.size(), 1.0);
}

PullOutcome BlockUcb::update(int arm, std::span<const double> raw, long) {
    const auto k = static_cast<std::size_t>(arm);
    const double value = block_reward(rewards_[k], raw, geom_.m);
    sum_[k] += value;
    ++tau_[k];
    long arg = kappa_map(geom_.m, geom_.b, tau_[k]);
    if (arg < 1) arg = 1;
    lambda_[k] += 2.0 * profiles_[k].phi(arg);
    return {arm, geom_.m, geom_.b, value};
}

double BlockUcb::index_of(int arm, long t) const {
    const auto k = static_cast<std::size_t>(arm);
    return block_ucb_index(mean(arm), lambda_[k], alpha_, std::log(static_cast<double>(t)),
                           tau_[k]);
}

ComboUcb::ComboUcb(std::vector<BlockReward> rewards, std::vector<MixingProfile> profiles,
                   double alpha, long s)
    : Policy(std::move(rewards), alpha), s_(s), combos_(combo_decompositions(s)) {
    check_alpha(alpha);
    if (profiles.size() != rewards_.size())
        throw std::invalid_argument("combo ucb: one profile per arm required");
    const auto arms = rewards_.size();
    combo_sum_.assign(arms, std::vector<double>(combos_.size(), 0.0));
    combo_msum_.assign(arms, std::vector<double>(combos_.size(), 1.0));
    for (std::size_t k = 0; k < arms; ++k)
        for (std::size_t c = 0; c < combos_.size(); ++c)
            combo_msum_[k][c] = m_sum(profiles[k], combos_[c].b);
}

double ComboUcb::combo_estimate(int arm, std::size_t combo) const {
    const auto k = static_cast<std::size_t>(arm);
    if (tau_[k] == 0) return 0.0;
    const auto& g = combos_[combo];
    const double count = static_cast<double>(g.beta) * static_cast<double>(tau_[k]);
    return combo_sum_[k][combo] / (combo_msum_[k][combo] * count);
}

double ComboUcb::combo_index(int arm, std::size_t combo, double log_t) const {
    const auto& g = combos_[combo];
    return combo_ucb_index(combo_estimate(arm, combo), g.beta, g.m + g.b, s_, alpha_, log_t,
                           tau_[static_cast<std::size_t>(arm)]);
}

std::size_t ComboUcb::best_combo(int arm, long t) const {
    const double log_t = std::log(static_cast<double>(t));
    std::size_t best = 0;
    double best_index = combo_index(arm, 0, log_t);
    for (std::size_t c = 1; c < combos_.size(); ++c) {
        const double idx = combo_index(arm, c, log_t);
        if (idx > best_index) {
            best = c;
            best_index = idx;
        }
    }
    return best;
}

double ComboUcb::index_of(int arm, long t) const {
    const double log_t = std::log(static_cast<double>(t));
    double best = combo_index(arm, 0, log_t);
    for (std::size_t c = 1; c < combos_.size(); ++c) best = std::max(best, combo_index(arm, c, log_t));
    return best;
}

int ComboUcb::select(long t) {
    const int arm = Policy::select(t);
    pending_combo_ = tau_[static_cast<std::size_t>(arm)] > 0 ? best_combo(arm, t) : 0;
    return arm;
}

PullOutcome ComboUcb::update(int arm, std::span<const double> raw, long) {
    const auto k = static_cast<std::size_t>(arm);
    if (static_cast<long>(raw.size()) != s_)
        throw std::invalid_argument("combo ucb: pull must supply s symbols");
    // every decomposition reads its own (emit m, skip b) view of the pull
    for (std::size_t c = 0; c < combos_.size(); ++c) {
        const auto& g = combos_[c];
        for (long r = 0; r < g.beta; ++r) {
            const auto offset = static_cast<std::size_t>(r * (g.m + g.b));
            combo_sum_[k][c] += rewards_[k].evaluate(raw.subspan(offset, static_cast<std::size_t>(g.m)));
        }
    }
    const auto& chosen = combos_[pending_combo_];
    double step_value = 0.0;
    for (long r = 0; r < chosen.beta; ++r) {
        const auto offset = static_cast<std::size_t>(r * (chosen.m + chosen.b));
        step_value += rewards_[k].evaluate(raw.subspan(offset, static_cast<std::size_t>(chosen.m)));
    }
    step_value /= static_cast<double>(chosen.beta);
    sum_[k] += step_value;
    ++tau_[k];
    return {arm, chosen.m, chosen.b, step_value};
}

std::vector<double> ComboUcb::estimates() const {
    std::vector<double> out(rewards_.size(), 0.0);
    for (int arm = 0; arm < num_arms(); ++arm) {
        const auto k = static_cast<std::size_t>(arm);
        if (tau_[k] == 0) continue;
        double best = 0.0;
        for (std::size_t c = 0; c < combos_.size(); ++c)
            best = std::max(best, static_cast<double>(combos_[c].beta) * combo_estimate(arm, c));
        out[k] = best;
    }
    return out;
}

RestlessUcb::RestlessUcb(std::vector<BlockReward> rewards, std::vector<MixingProfile> profiles,
                         double alpha, std::vector<long> block_lengths)
    : Policy(std::move(rewards), alpha), profiles_(std::move(profiles)), m_(std::move(block_lengths)) {
    check_alpha(alpha);
    if (profiles_.size() != rewards_.size())
        throw std::invalid_argument("restless ucb: one profile per arm required");
    if (m_.size() != rewards_.size())
        throw std::invalid_argument("restless ucb: one block length per arm required");
    for (long m : m_)
        if (m < 1) throw std::invalid_argument("restless ucb: block lengths must be >= 1");
    eta_.assign(rewards_.size(), 0);
}

PullOutcome RestlessUcb::update(int arm, std::span<const double> raw, long) {
    const auto k = static_cast<std::size_t>(arm);
    const double value = block_reward(rewards_[k], raw, m_[k]);
    sum_[k] += value;
    ++tau_[k];
    const long gap = eta_[k];
    eta_[k] = 0;
    for (std::size_t j = 0; j < eta_.size(); ++j)
        if (j != k) eta_[j] += m_[k];
    return {arm, m_[k], gap, value};
}

double RestlessUcb::index_of(int arm, long t) const {
    const auto k = static_cast<std::size_t>(arm);
    const double msum = restless_m_sum(profiles_[k], eta_[k]);
    return restless_ucb_index(mean(arm), alpha_, std::log(static_cast<double>(t)), tau_[k], msum);
}

GenericUcb::GenericUcb(std::vector<BlockReward> rewards, double alpha,
                       std::vector<MonotoneMap> theta, std::vector<MonotoneMap> gamma, long m,
                       long b)
    : Policy(std::move(rewards), alpha), geom_{m, b}, theta_(std::move(theta)), gamma_(std::move(gamma)) {
    check_alpha(alpha);
    check_geometry_args(m, b);
    if (theta_.size() != rewards_.size() || gamma_.size() != rewards_.size())
        throw std::invalid_argument("generic ucb: one theta and gamma map per arm required");
}

PullOutcome GenericUcb::update(int arm, std::span<const double> raw, long) {
    const auto k = static_cast<std::size_t>(arm);
    const double value = block_reward(rewards_[k], raw, geom_.m);
    sum_[k] += value;
    ++tau_[k];
    return {arm, geom_.m, geom_.b, value};
}

double GenericUcb::bonus(int arm, long t) const {
    const auto k = static_cast<std::size_t>(arm);
    const double load = alpha_ * std::log(static_cast<double>(t)) /
                        theta_[k](static_cast<double>(tau_[k]));
    return gamma_[k].inverse(load);
}

double GenericUcb::index_of(int arm, long t) const { return mean(arm) + bonus(arm, t); }

RandomPolicy::RandomPolicy(std::vector<BlockReward> rewards, long m, long b, std::uint64_t seed)
    : Policy(std::move(rewards), 3.0), geom_{m, b}, seed_(seed) {
    check_geometry_args(m, b);
}

int RandomPolicy::select(long t) {
    return static_cast<int>(counter_bits(seed_, static_cast<std::uint64_t>(t)) %
                            static_cast<std::uint64_t>(num_arms()));
}

PullOutcome RandomPolicy::update(int arm, std::span<const double> raw, long) {
    const auto k = static_cast<std::size_t>(arm);
    const double value = block_reward(rewards_[k], raw, geom_.m);
    sum_[k] += value;
    ++tau_[k];
    return {arm, geom_.m, geom_.b, value};
}

double RandomPolicy::index_of(int arm, long) const { return mean(arm); }

FixedArmPolicy::FixedArmPolicy(std::vector<BlockReward> rewards, int arm, long m, long b)
    : Policy(std::move(rewards), 3.0), geom_{m, b}, arm_(arm) {
    check_geometry_args(m, b);
    if (arm < 0 || arm >= num_arms()) throw std::invalid_argument("fixed policy: arm out of range");
}

PullOutcome FixedArmPolicy::update(int arm, std::span<const double> raw, long) {
    const auto k = static_cast<std::size_t>(arm);
    const double value = block_reward(rewards_[k], raw, geom_.m);
    sum_[k] += value;
    ++tau_[k];
    return {arm, geom_.m, geom_.b, value};
}

double FixedArmPolicy::index_of(int arm, long) const { return mean(arm); }

}  // namespace mixbandit
