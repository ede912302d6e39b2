#include "mixbandit/environments.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mixbandit {

RegretSpec RegretSpec::from_values(RegretKind kind, std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("regret spec: need at least one arm value");
    RegretSpec spec;
    spec.kind = kind;
    spec.optimal = *std::max_element(values.begin(), values.end());
    spec.arm_values = std::move(values);
    return spec;
}

void RunRecord::write_csv(std::ostream& os) const {
    os << "step,arm,m,b,reward,inst_regret,cum_regret\n";
    long step = 1;
    for (const auto& s : steps) {
        os << step++ << ',' << s.arm << ',' << s.m << ',' << s.b << ',' << s.reward << ','
           << s.inst_regret << ',' << s.cum_regret << '\n';
    }
}

namespace {

void check_run(const Policy& policy, const std::vector<ArmProcess>& arms, long horizon,
               const RegretSpec& regret) {
    if (static_cast<int>(arms.size()) != policy.num_arms())
        throw std::invalid_argument("run: arm count does not match the policy");
    if (regret.arm_values.size() != arms.size())
        throw std::invalid_argument("run: regret spec does not match the arm count");
    if (horizon < policy.num_arms())
        throw std::invalid_argument("run: horizon must cover the initialization round");
}

RunRecord finish(const Policy& policy, RunRecord record) {
    record.pulls = policy.pulls();
    record.terminal_means = policy.estimates();
    record.total_regret = record.steps.empty() ? 0.0 : record.steps.back().cum_regret;
    return record;
}

}  // namespace

RunRecord run_rested(Policy& policy, std::vector<ArmProcess>& arms, long horizon,
                     const RegretSpec& regret, std::uint64_t seed_label) {
    check_run(policy, arms, horizon, regret);
    RunRecord record;
    record.seed = seed_label;
    record.steps.reserve(static_cast<std::size_t>(horizon));
    std::vector<double> raw;
    double cum = 0.0;
    for (long t = 1; t <= horizon; ++t) {
        const int arm = policy.select(t);
        arms[static_cast<std::size_t>(arm)].emit(policy.raw_steps(arm), raw);
        const PullOutcome outcome = policy.update(arm, raw, t);
        const double inst = regret.optimal - regret.arm_values[static_cast<std::size_t>(arm)];
        cum += inst;
        record.steps.push_back({outcome.arm, outcome.m, outcome.b, outcome.reward, inst, cum});
    }
    return finish(policy, std::move(record));
}

RunRecord run_restless(Policy& policy, std::vector<ArmProcess>& arms, long horizon,
                       const RegretSpec& regret, std::uint64_t seed_label) {
    check_run(policy, arms, horizon, regret);
    RunRecord record;
    record.seed = seed_label;
    record.steps.reserve(static_cast<std::size_t>(horizon));
    std::vector<double> raw;
    double cum = 0.0;
    for (long t = 1; t <= horizon; ++t) {
        const int arm = policy.select(t);
        const long span = policy.raw_steps(arm);
        arms[static_cast<std::size_t>(arm)].emit(span, raw);
        for (std::size_t k = 0; k < arms.size(); ++k)
            if (static_cast<int>(k) != arm) arms[k].skip(span);
        const PullOutcome outcome = policy.update(arm, raw, t);
        const double inst = regret.optimal - regret.arm_values[static_cast<std::size_t>(arm)];
        cum += inst;
        record.steps.push_back({outcome.arm, outcome.m, outcome.b, outcome.reward, inst, cum});
    }
    return finish(policy, std::move(record));
}

}  // namespace mixbandit
