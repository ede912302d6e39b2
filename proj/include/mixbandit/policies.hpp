#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mixbandit/mixing_math.hpp"
#include "mixbandit/rewards.hpp"

namespace mixbandit {

// Index arithmetic, exposed for direct checks.
double classical_ucb_index(double mean, double alpha, double log_t, long tau);
double block_ucb_index(double mean, double lambda, double alpha, double log_t, long tau);
double restless_ucb_index(double mean, double alpha, double log_t, long tau, double msum);
double combo_ucb_index(double estimate, long beta, long mb, long s, double alpha, double log_t,
                       long tau);

struct ComboGeometry {
    long m;
    long b;
    long beta;  // s / (m + b)
};

// All (m, b) with m >= 1, b >= 0 and (m+b) | s, ordered by m+b then m.
std::vector<ComboGeometry> combo_decompositions(long s);

struct PullOutcome {
    int arm;
    long m;
    long b;
    double reward;
};

// Arm-selection engine.  A policy owns the per-arm counters; the environment
// owns the processes and feeds raw symbol blocks through update().
class Policy {
  public:
    Policy(std::vector<BlockReward> rewards, double alpha);
    virtual ~Policy() = default;

    int num_arms() const { return static_cast<int>(rewards_.size()); }
    double alpha() const { return alpha_; }
    const std::vector<long>& pulls() const { return tau_; }

    // Forced round robin until every arm has one pull, then the index argmax
    // with ties broken toward the lowest arm id.
    virtual int select(long t);

    // Raw symbols to draw from the chosen arm on this step.
    virtual long raw_steps(int arm) const = 0;

    virtual PullOutcome update(int arm, std::span<const double> raw, long t) = 0;

    // Index of an initialized arm at step t.
    virtual double index_of(int arm, long t) const = 0;

    // Per-arm exploitation estimates (empirical means or combo values).
    virtual std::vector<double> estimates() const;

  protected:
    double mean(int arm) const;

    std::vector<BlockReward> rewards_;
    double alpha_;
    std::vector<long> tau_;
    std::vector<double> sum_;
};

// Plain UCB over block rewards; ignores mixing entirely.
class ClassicalUcb : public Policy {
  public:
    ClassicalUcb(std::vector<BlockReward> rewards, double alpha, long m, long b);

    long raw_steps(int) const override { return geom_.s(); }
    PullOutcome update(int arm, std::span<const double> raw, long t) override;
    double index_of(int arm, long t) const override;

    BlockGeometry geometry() const { return geom_; }

  private:
    BlockGeometry geom_;
};

// Rested block policy with fixed (m, b): mean of the m informative symbols
// per block plus a Lambda-widened confidence bonus.
class BlockUcb : public Policy {
  public:
    BlockUcb(std::vector<BlockReward> rewards, std::vector<MixingProfile> profiles, double alpha,
             long m, long b);

    long raw_steps(int) const override { return geom_.s(); }
    PullOutcome update(int arm, std::span<const double> raw, long t) override;
    double index_of(int arm, long t) const override;

    BlockGeometry geometry() const { return geom_; }
    double lambda(int arm) const { return lambda_[static_cast<std::size_t>(arm)]; }

  private:
    BlockGeometry geom_;
    std::vector<MixingProfile> profiles_;
    std::vector<double> lambda_;  // Lambda(tau_k), grown incrementally
};

// Rested policy that learns the (m, b) split of its s-symbol pulls along
// with the best arm.  One estimator per decomposition per arm.
class ComboUcb : public Policy {
  public:
    ComboUcb(std::vector<BlockReward> rewards, std::vector<MixingProfile> profiles, double alpha,
             long s);

    long raw_steps(int) const override { return s_; }
    int select(long t) override;
    PullOutcome update(int arm, std::span<const double> raw, long t) override;
    double index_of(int arm, long t) const override;
    std::vector<double> estimates() const override;

    long s() const { return s_; }
    const std::vector<ComboGeometry>& combos() const { return combos_; }
    // scaled estimator psi_hat for one (arm, combo)
    double combo_estimate(int arm, std::size_t combo) const;
    std::size_t best_combo(int arm, long t) const;

  private:
    double combo_index(int arm, std::size_t combo, double log_t) const;

    long s_;
    std::vector<ComboGeometry> combos_;
    std::vector<std::vector<double>> combo_sum_;   // [arm][combo] raw psi sums
    std::vector<std::vector<double>> combo_msum_;  // [arm][combo] M_k(b)
    std::size_t pending_combo_ = 0;
};

// Restless policy: every arm ages each step; the bonus uses the restless
// tail sum at the arm's current idle time, exactly as the index is printed.
class RestlessUcb : public Policy {
  public:
    RestlessUcb(std::vector<BlockReward> rewards, std::vector<MixingProfile> profiles, double alpha,
                std::vector<long> block_lengths);

    long raw_steps(int arm) const override { return m_[static_cast<std::size_t>(arm)]; }
    PullOutcome update(int arm, std::span<const double> raw, long t) override;
    double index_of(int arm, long t) const override;

    const std::vector<long>& block_lengths() const { return m_; }
    const std::vector<long>& idle_times() const { return eta_; }

  private:
    std::vector<MixingProfile> profiles_;
    std::vector<long> m_;
    std::vector<long> eta_;  // raw steps since the arm was last pulled
};

// (alpha, theta, gamma)-UCB with pluggable per-arm maps.
class GenericUcb : public Policy {
  public:
    GenericUcb(std::vector<BlockReward> rewards, double alpha, std::vector<MonotoneMap> theta,
               std::vector<MonotoneMap> gamma, long m, long b);

    long raw_steps(int) const override { return geom_.s(); }
    PullOutcome update(int arm, std::span<const double> raw, long t) override;
    double index_of(int arm, long t) const override;

    double bonus(int arm, long t) const;

  private:
    BlockGeometry geom_;
    std::vector<MonotoneMap> theta_;
    std::vector<MonotoneMap> gamma_;
};

// Uniform-random selections; a sanity baseline.
class RandomPolicy : public Policy {
  public:
    RandomPolicy(std::vector<BlockReward> rewards, long m, long b, std::uint64_t seed);

    int select(long t) override;
    long raw_steps(int) const override { return geom_.s(); }
    PullOutcome update(int arm, std::span<const double> raw, long t) override;
    double index_of(int arm, long t) const override;

  private:
    BlockGeometry geom_;
    std::uint64_t seed_;
};

// Always plays one arm; regret oracle checks use it.
class FixedArmPolicy : public Policy {
  public:
    FixedArmPolicy(std::vector<BlockReward> rewards, int arm, long m, long b);

    int select(long) override { return arm_; }
    long raw_steps(int) const override { return geom_.s(); }
    PullOutcome update(int arm, std::span<const double> raw, long t) override;
    double index_of(int arm, long t) const override;

  private:
    BlockGeometry geom_;
    int arm_;
};

}  // namespace mixbandit
