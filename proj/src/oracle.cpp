#include "mixbandit/oracle.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "mixbandit/mixing_math.hpp"
#include "mixbandit/rng.hpp"
#include "mixbandit/stats.hpp"

namespace mixbandit {

ValueTable value_table(const std::vector<ArmProcess>& arms,
                       const std::vector<BlockReward>& rewards, long s) {
    if (arms.empty()) throw std::invalid_argument("value_table: need at least one arm");
    if (arms.size() != rewards.size())
        throw std::invalid_argument("value_table: one reward per arm required");

    ValueTable table;
    table.s = s;
    const auto combos = combo_decompositions(s);
    table.arm_best.resize(arms.size());
    table.arm_best_value.assign(arms.size(), 0.0);

    for (std::size_t k = 0; k < arms.size(); ++k) {
        bool first = true;
        for (const auto& g : combos) {
            const double mu = exact_mu(rewards[k], arms[k], g.m);
            const double msum = m_sum(arms[k].profile(), g.b);
            const double value = static_cast<double>(g.beta) / msum * mu;
            ValueEntry entry{static_cast<int>(k), g.m, g.b, g.beta, mu, msum, value};
            table.entries.push_back(entry);
            if (first || value > table.arm_best_value[k]) {
                table.arm_best[k] = entry;
                table.arm_best_value[k] = value;
                first = false;
            }
        }
    }
    table.best_arm = 0;
    for (std::size_t k = 1; k < arms.size(); ++k)
        if (table.arm_best_value[k] > table.arm_best_value[static_cast<std::size_t>(table.best_arm)])
            table.best_arm = static_cast<int>(k);
    const auto& top = table.arm_best[static_cast<std::size_t>(table.best_arm)];
    table.best_m = top.m;
    table.best_b = top.b;
    table.best_value = top.value;
    table.gaps.resize(arms.size());
    for (std::size_t k = 0; k < arms.size(); ++k)
        table.gaps[k] = table.best_value - table.arm_best_value[k];
    return table;
}

void TailReport::write_csv(std::ostream& os) const {
    os << "eps,empirical,wilson_hi,bound,pass\n";
    for (const auto& p : points)
        os << p.eps << ',' << p.empirical << ',' << p.wilson_hi << ',' << p.bound << ','
           << (p.pass ? 1 : 0) << '\n';
}

std::vector<double> standard_eps_grid() {
    std::vector<double> grid;
    for (int j = 1; j <= 10; ++j) grid.push_back(0.05 * j);
    return grid;
}

TailReport tail_estimate(const ArmProcess& arm, const BlockReward& reward, TailMode mode, long m,
                         long b, long blocks, const std::vector<double>& eps_grid, long trials,
                         std::uint64_t seed) {
    if (m < 1 || b < 0) throw std::invalid_argument("tail_estimate: bad geometry");
    if (blocks < 1) throw std::invalid_argument("tail_estimate: need at least one block");
    if (trials < 10'000) throw std::invalid_argument("tail_estimate: need at least 1e4 trials");

    TailReport report;
    report.mode = mode;
    report.m = m;
    report.b = b;
    report.blocks = blocks;
    report.trials = trials;
    report.mu = exact_mu(reward, arm, m);

    const double n = static_cast<double>(blocks);
    const double lambda = lambda_sum(arm.profile(), {m, b}, blocks);
    const double msum = m_sum(arm.profile(), b);
    const double restless = restless_m_sum(arm.profile(), b);

    std::vector<long> exceed(eps_grid.size(), 0);
    std::vector<double> raw;
    for (long trial = 0; trial < trials; ++trial) {
        ArmProcess walker = arm.fresh(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        double acc = 0.0;
        if (mode == TailMode::Restless) {
            // one gap of b after the first block, contiguous afterwards
            walker.emit(m, raw);
            acc += reward.evaluate(raw);
            walker.skip(b);
            for (long i = 1; i < blocks; ++i) {
                walker.emit(m, raw);
                acc += reward.evaluate(raw);
            }
        } else {
            for (long i = 0; i < blocks; ++i) {
                walker.emit(m, raw);
                acc += reward.evaluate(raw);
                walker.skip(b);
            }
        }
        double deviation = std::abs(acc / n - report.mu);
        if (mode == TailMode::Rested) deviation /= msum;
        for (std::size_t j = 0; j < eps_grid.size(); ++j)
            if (deviation > eps_grid[j]) ++exceed[j];
    }

    // below this value no upper confidence limit can sit under the bound,
    // whatever the data; there the check degrades to non-falsification
    const double z = 2.5758;  // two-sided 99%
    const double floor = wilson_upper(0, trials, z);
    for (std::size_t j = 0; j < eps_grid.size(); ++j) {
        TailPoint point;
        point.eps = eps_grid[j];
        point.empirical = static_cast<double>(exceed[j]) / static_cast<double>(trials);
        point.wilson_hi = wilson_upper(exceed[j], trials, z);
        const double e2 = point.eps * point.eps;
        double exponent = 0.0;
        double one_sided_factor = 1.0;
        switch (mode) {
            case TailMode::Block:
                exponent = n * e2 / (2.0 * lambda * lambda);
                break;
            case TailMode::Rested:
                exponent = n * e2 / 2.0;
                one_sided_factor = 2.0;
                break;
            case TailMode::Restless:
                exponent = n * e2 / (2.0 * restless * restless);
                one_sided_factor = 2.0;
                break;
        }
        point.bound = std::min(1.0, one_sided_factor * std::exp(-exponent));
        point.bound_two_sided = std::min(1.0, 2.0 * std::exp(-exponent));
        point.pass = point.wilson_hi <= point.bound ||
                     (point.bound < floor && wilson_lower(exceed[j], trials, z) <= point.bound);
        report.all_pass = report.all_pass && point.pass;
        report.points.push_back(point);
    }
    return report;
}

MonteCarloMu monte_carlo_mu(const BlockReward& reward, const ArmProcess& arm, long m, long blocks,
                            std::uint64_t seed) {
    if (m < 1 || blocks < 2) throw std::invalid_argument("monte_carlo_mu: bad arguments");
    ArmProcess walker = arm.fresh(derive_seed(seed, 0x6d63));
    std::vector<double> raw;
    double acc = 0.0, sq = 0.0;
    for (long i = 0; i < blocks; ++i) {
        walker.emit(m, raw);
        const double v = reward.evaluate(raw);
        acc += v;
        sq += v * v;
    }
    const double n = static_cast<double>(blocks);
    const double mean = acc / n;
    const double var = std::max(0.0, sq / n - mean * mean);
    return {mean, std::sqrt(var / n), blocks};
}

}  // namespace mixbandit
