#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mixbandit/policies.hpp"
#include "mixbandit/processes.hpp"

namespace mixbandit {

enum class RegretKind { RestedBlock, Combination, Restless };

// Ground-truth values the regret ledger charges against; one entry per arm
// (mu for fixed-block runs, the best combination value nu* otherwise).
struct RegretSpec {
    RegretKind kind = RegretKind::RestedBlock;
    std::vector<double> arm_values;
    double optimal = 0.0;

    static RegretSpec from_values(RegretKind kind, std::vector<double> values);
};

struct StepRecord {
    int arm;
    long m;
    long b;
    double reward;
    double inst_regret;
    double cum_regret;
};

// One trajectory; replayable bit-exactly from (config, seed).
struct RunRecord {
    std::string config_hash;
    std::uint64_t seed = 0;
    std::vector<StepRecord> steps;
    std::vector<long> pulls;
    std::vector<double> terminal_means;
    double total_regret = 0.0;

    // step, arm, m, b, reward, inst_regret, cum_regret
    void write_csv(std::ostream& os) const;
};

// Rested run: only the pulled arm's clock advances.
RunRecord run_rested(Policy& policy, std::vector<ArmProcess>& arms, long horizon,
                     const RegretSpec& regret, std::uint64_t seed_label);

// Restless run: every arm's clock advances by the chosen arm's block length;
// unplayed arms generate and discard their symbols.
RunRecord run_restless(Policy& policy, std::vector<ArmProcess>& arms, long horizon,
                       const RegretSpec& regret, std::uint64_t seed_label);

}  // namespace mixbandit
