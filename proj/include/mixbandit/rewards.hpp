#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mixbandit/processes.hpp"

namespace mixbandit {

// Block reward: a [0,1]-valued function of m consecutive symbols,
// 1-Lipschitz under the Hamming metric.
class BlockReward {
  public:
    enum class Kind { BlockMean, BlockMax, PatternIndicator, WeightedMean };

    static BlockReward block_mean();
    static BlockReward block_max();
    // 1 iff the block equals the target sequence exactly
    static BlockReward pattern(std::vector<double> target);
    // weights >= 0 summing to 1
    static BlockReward weighted_mean(std::vector<double> weights);

    double evaluate(std::span<const double> block) const;

    Kind kind() const { return kind_; }
    const std::vector<double>& params() const { return params_; }
    // PatternIndicator and WeightedMean fix the block length
    std::optional<long> required_length() const;

  private:
    BlockReward(Kind kind, std::vector<double> params) : kind_(kind), params_(std::move(params)) {}

    Kind kind_;
    std::vector<double> params_;
};

// Exact E psi(X_1..X_m) by enumerating alphabet^m against the stationary
// path law.  Supports IID and Markov kernels; throws std::domain_error when
// the enumeration exceeds 1e7 states or the kernel has no tractable law.
double exact_mu(const BlockReward& reward, const ArmProcess& arm, long m);

// Largest |psi(x) - psi(x')| / hamming(x, x') observed; exhaustive over all
// single-coordinate flips when |U|^m <= limit, random pairs otherwise.
// A 1-Lipschitz reward keeps this <= 1.
double max_lipschitz_ratio(const BlockReward& reward, const Alphabet& alphabet, long m,
                           std::uint64_t seed, long limit = 100'000);

}  // namespace mixbandit
