#include "mixbandit/rewards.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mixbandit/rng.hpp"

namespace mixbandit {

BlockReward BlockReward::block_mean() { return {Kind::BlockMean, {}}; }

BlockReward BlockReward::block_max() { return {Kind::BlockMax, {}}; }

BlockReward BlockReward::pattern(std::vector<double> target) {
    if (target.empty()) throw std::invalid_argument("pattern: target must be nonempty");
    for (double v : target)
        if (!(v >= 0.0) || v > 1.0) throw std::invalid_argument("pattern: target values must be in [0,1]");
    return {Kind::PatternIndicator, std::move(target)};
}

BlockReward BlockReward::weighted_mean(std::vector<double> weights) {
    if (weights.empty()) throw std::invalid_argument("weighted_mean: weights must be nonempty");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("weighted_mean: weights must be >= 0");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("weighted_mean: weights must sum to 1");
    return {Kind::WeightedMean, std::move(weights)};
}

std::optional<long> BlockReward::required_length() const {
    if (kind_ == Kind::PatternIndicator || kind_ == Kind::WeightedMean)
        return static_cast<long>(params_.size());
    return std::nullopt;
}

double BlockReward::evaluate(std::span<const double> block) const {
    if (block.empty()) throw std::invalid_argument("evaluate: block must be nonempty");
    if (auto want = required_length(); want && *want != static_cast<long>(block.size()))
        throw std::invalid_argument("evaluate: block length does not match the reward");
    switch (kind_) {
        case Kind::BlockMean: {
            double acc = 0.0;
            for (double v : block) acc += v;
            return acc / static_cast<double>(block.size());
        }
        case Kind::BlockMax: {
            double top = 0.0;
            for (double v : block) top = std::max(top, v);
            return top;
        }
        case Kind::PatternIndicator: {
            for (std::size_t i = 0; i < block.size(); ++i)
                if (block[i] != params_[i]) return 0.0;
            return 1.0;
        }
        case Kind::WeightedMean: {
            double acc = 0.0;
            for (std::size_t i = 0; i < block.size(); ++i) acc += params_[i] * block[i];
            return acc;
        }
    }
    return 0.0;
}

namespace {

double path_probability(const ArmProcess& arm, const std::vector<int>& idx) {
    const auto& pi = arm.stationary();
    double p = pi[static_cast<std::size_t>(idx[0])];
    if (arm.kernel() == ArmProcess::Kernel::Markov) {
        const auto& tr = arm.transition();
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
            p *= tr[static_cast<std::size_t>(idx[i])][static_cast<std::size_t>(idx[i + 1])];
    } else {
        for (std::size_t i = 1; i < idx.size(); ++i) p *= pi[static_cast<std::size_t>(idx[i])];
    }
    return p;
}

}  // namespace

double exact_mu(const BlockReward& reward, const ArmProcess& arm, long m) {
    if (m < 1) throw std::invalid_argument("exact_mu: m must be >= 1");
    if (auto want = reward.required_length(); want && *want != m)
        throw std::invalid_argument("exact_mu: m does not match the reward length");
    if (arm.kernel() == ArmProcess::Kernel::FiniteRange)
        throw std::domain_error("exact_mu: no closed path law for this kernel");
    const double states = std::pow(static_cast<double>(arm.alphabet().size()), static_cast<double>(m));
    if (states > 1e7) throw std::domain_error("exact_mu: enumeration infeasible");

    const int size = static_cast<int>(arm.alphabet().size());
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    std::vector<double> block(static_cast<std::size_t>(m));
    double acc = 0.0, comp = 0.0;  // Kahan
    while (true) {
        for (std::size_t i = 0; i < idx.size(); ++i)
            block[i] = arm.alphabet().value(static_cast<std::size_t>(idx[i]));
        const double term = reward.evaluate(block) * path_probability(arm, idx);
        const double y = term - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
        // odometer increment
        std::size_t pos = idx.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < size) break;
            idx[pos] = 0;
            if (pos == 0) return acc;
        }
    }
}

double max_lipschitz_ratio(const BlockReward& reward, const Alphabet& alphabet, long m,
                           std::uint64_t seed, long limit) {
    if (m < 1) throw std::invalid_argument("max_lipschitz_ratio: m must be >= 1");
    const int size = static_cast<int>(alphabet.size());
    const double states = std::pow(static_cast<double>(size), static_cast<double>(m));
    double worst = 0.0;
    std::vector<double> block(static_cast<std::size_t>(m));

    if (states <= static_cast<double>(limit)) {
        // every block, every single-coordinate flip; by the triangle
        // inequality this certifies the full Hamming bound
        std::vector<int> idx(static_cast<std::size_t>(m), 0);
        while (true) {
            for (std::size_t i = 0; i < idx.size(); ++i)
                block[i] = alphabet.value(static_cast<std::size_t>(idx[i]));
            const double base = reward.evaluate(block);
            for (std::size_t pos = 0; pos < idx.size(); ++pos) {
                const double keep = block[pos];
                for (int v = 0; v < size; ++v) {
                    if (v == idx[pos]) continue;
                    block[pos] = alphabet.value(static_cast<std::size_t>(v));
                    worst = std::max(worst, std::abs(reward.evaluate(block) - base));
                }
                block[pos] = keep;
            }
            std::size_t pos = idx.size();
            while (pos > 0) {
                --pos;
                if (++idx[pos] < size) break;
                idx[pos] = 0;
                if (pos == 0) return worst;
            }
        }
    }

    std::vector<double> other(static_cast<std::size_t>(m));
    std::uint64_t ctr = 0;
    for (long trial = 0; trial < limit; ++trial) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            const auto draw = counter_bits(seed, ctr++) % static_cast<std::uint64_t>(size);
            block[i] = alphabet.value(static_cast<std::size_t>(draw));
        }
        other = block;
        long flips = 1 + static_cast<long>(counter_bits(seed, ctr++) % static_cast<std::uint64_t>(m));
        long differ = 0;
        for (long f = 0; f < flips; ++f) {
            const auto pos = static_cast<std::size_t>(counter_bits(seed, ctr++) % static_cast<std::uint64_t>(m));
            const auto draw = counter_bits(seed, ctr++) % static_cast<std::uint64_t>(size);
            other[pos] = alphabet.value(static_cast<std::size_t>(draw));
        }
        for (std::size_t i = 0; i < block.size(); ++i)
            if (block[i] != other[i]) ++differ;
        if (differ == 0) continue;
        const double gap = std::abs(reward.evaluate(block) - reward.evaluate(other));
        worst = std::max(worst, gap / static_cast<double>(differ));
    }
    return worst;
}

}  // namespace mixbandit
