#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mixbandit/policies.hpp"
#include "mixbandit/processes.hpp"
#include "mixbandit/rewards.hpp"

// Ground truth used by the regret ledgers and the verification harness.

namespace mixbandit {

struct ValueEntry {
    int arm;
    long m;
    long b;
    long beta;
    double mu;     // exact E psi_m
    double msum;   // M_k(b)
    double value;  // beta / M_k(b) * mu
};

struct ValueTable {
    long s = 0;
    std::vector<ValueEntry> entries;
    int best_arm = 0;
    long best_m = 1;
    long best_b = 0;
    double best_value = 0.0;
    std::vector<ValueEntry> arm_best;     // per-arm argmax entry
    std::vector<double> arm_best_value;   // nu*_k
    std::vector<double> gaps;             // best_value - nu*_k
};

// Full value table over (arm, m, b) with m+b | s, plus the argmaxes.
ValueTable value_table(const std::vector<ArmProcess>& arms,
                       const std::vector<BlockReward>& rewards, long s);

enum class TailMode { Block, Rested, Restless };

struct TailPoint {
    double eps;
    double empirical;
    double wilson_hi;
    double bound;            // bound as printed for the mode, clipped to 1
    double bound_two_sided;  // two-sided variant, clipped to 1
    bool pass;               // wilson_hi <= bound
};

struct TailReport {
    TailMode mode;
    long m = 1;
    long b = 0;
    long blocks = 0;
    long trials = 0;
    double mu = 0.0;
    std::vector<TailPoint> points;
    bool all_pass = true;

    // eps, empirical, wilson_hi, bound, pass
    void write_csv(std::ostream& os) const;
};

// Monte Carlo exceedance of the mode's deviation statistic against its
// concentration bound.  Each trial runs a fresh seeded copy of the arm.
TailReport tail_estimate(const ArmProcess& arm, const BlockReward& reward, TailMode mode, long m,
                         long b, long blocks, const std::vector<double>& eps_grid, long trials,
                         std::uint64_t seed);

// 0.05, 0.10, ..., 0.50
std::vector<double> standard_eps_grid();

struct MonteCarloMu {
    double mean;
    double stderr_of_mean;
    long blocks;
};

// Fallback for kernels without a tractable path law.
MonteCarloMu monte_carlo_mu(const BlockReward& reward, const ArmProcess& arm, long m, long blocks,
                            std::uint64_t seed);

}  // namespace mixbandit
