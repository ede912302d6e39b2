#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixbandit/oracle.hpp"

// Config-driven experiment harness behind the command line tool.
//
// Configs are line oriented: global keys first, then [arm], [reward],
// [policy], [assert] and [tail] sections.  Every line is `key value...`,
// blank lines and #-comments are skipped, unknown keys are errors.

namespace mixbandit {

class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string& field, const std::string& what)
        : std::runtime_error("config error at '" + field + "': " + what), field_(field) {}

    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

enum class Scenario { RestedFixed, RestedCombo, Restless, ConcentrationLab };

struct ArmConfig {
    enum class Kind { IID, Markov, FiniteRange };
    Kind kind = Kind::IID;
    std::vector<double> alphabet;
    std::vector<double> probs;               // iid
    std::vector<std::vector<double>> rows;   // markov
    long order = 1;                          // finite_range
    std::uint64_t seed = 0;
};

struct RewardConfig {
    BlockReward::Kind kind = BlockReward::Kind::BlockMean;
    std::vector<double> params;  // pattern target or weights
};

struct PolicyConfig {
    enum class Kind { ClassicalUcb, BlockUcb, ComboUcb, RestlessUcb, Random, Fixed };
    Kind kind = Kind::ClassicalUcb;
    double alpha = 2.5;
    long m = 1;
    long b = 0;
    long s = 1;
    std::vector<long> mk;
    int arm = 0;
    std::uint64_t seed = 1;
};

struct AssertConfig {
    enum class Kind { RegretUnderBound, LogGrowth, IidReduction, FinalShare, TailsDominated };
    Kind kind = Kind::RegretUnderBound;
    double min_share = 0.9;   // final_share
    double window = 0.1;      // final_share
    long from_t = 1000;       // log_growth
    double slack = 0.10;      // log_growth
};

struct TailConfig {
    TailMode mode = TailMode::Block;
    int arm = 0;
    int reward = 0;
    long m = 1;
    long b = 0;
    long blocks = 100;
    long trials = 100'000;
    std::vector<double> eps;  // empty = standard grid
};

struct ExperimentConfig {
    Scenario scenario = Scenario::RestedFixed;
    long horizon = 0;
    std::uint64_t seed_base = 1;
    long seed_count = 1;
    std::vector<std::uint64_t> seeds;  // explicit list wins over base/count
    std::string out;
    std::vector<ArmConfig> arms;
    std::vector<RewardConfig> rewards;
    std::optional<PolicyConfig> policy;
    std::vector<AssertConfig> asserts;
    std::vector<TailConfig> tails;

    std::vector<std::uint64_t> seed_list() const;
};

ExperimentConfig parse_config(const std::string& text);
std::string serialize_config(const ExperimentConfig& config);
std::string config_hash(const ExperimentConfig& config);

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

// Instantiate the process / reward / policy described by a config.
ArmProcess build_arm(const ArmConfig& spec);
BlockReward build_reward(const RewardConfig& spec);

struct AssertionResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct ExperimentSummary {
    std::string hash;
    Scenario scenario;
    long horizon = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<long> checkpoints;
    std::vector<double> mean_regret;
    std::vector<double> stderr_regret;
    double bound = 0.0;
    bool has_bound = false;
    std::vector<double> oracle_values;  // mu_k, or nu*_k for combo runs
    int oracle_best_arm = 0;
    long oracle_best_m = 1;
    long oracle_best_b = 0;
    std::vector<double> mean_pulls;
    std::vector<TailReport> tails;
    std::vector<AssertionResult> assertions;
    std::vector<std::string> warnings;
    bool all_pass = true;
};

struct RunOptions {
    int jobs = 1;
};

// Execute the config: one run per seed, aggregate regret at log-spaced
// checkpoints, evaluate the declared assertions and, when `out` is set,
// write run CSVs plus aggregate JSON and the bound table.
ExperimentSummary run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

// Regret-bound and tail-sum tables for a config, without simulating.
std::string bounds_report(const ExperimentConfig& config);

// Built-in example configs, by name.
const std::vector<std::pair<std::string, std::string>>& presets();
const std::string* find_preset(const std::string& name);

// Log-spaced checkpoints ceil(10^(j/8)) up to and including the horizon.
std::vector<long> regret_checkpoints(long horizon);

}  // namespace mixbandit
