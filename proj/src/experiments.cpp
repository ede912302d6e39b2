#include "mixbandit/experiments.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mixbandit/environments.hpp"
#include "mixbandit/mixing_math.hpp"
#include "mixbandit/rng.hpp"

namespace fs = std::filesystem;

namespace mixbandit {

namespace {

// ---- lexing -------------------------------------------------------------

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

double parse_double(const std::string& field, const std::string& tok) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(field, "expected a number, got '" + tok + "'");
    }
}

long parse_long(const std::string& field, const std::string& tok) {
    try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(field, "expected an integer, got '" + tok + "'");
    }
}

std::uint64_t parse_u64(const std::string& field, const std::string& tok) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(field, "expected an unsigned integer, got '" + tok + "'");
    }
}

std::vector<double> parse_doubles(const std::string& field, const std::vector<std::string>& toks) {
    if (toks.empty()) throw ConfigError(field, "expected at least one value");
    std::vector<double> out;
    for (const auto& t : toks) out.push_back(parse_double(field, t));
    return out;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// ---- enum names ---------------------------------------------------------

std::string scenario_name(Scenario s) {
    switch (s) {
        case Scenario::RestedFixed: return "rested_fixed";
        case Scenario::RestedCombo: return "rested_combo";
        case Scenario::Restless: return "restless";
        case Scenario::ConcentrationLab: return "concentration_lab";
    }
    return "rested_fixed";
}

Scenario scenario_from(const std::string& field, const std::string& name) {
    if (name == "rested_fixed") return Scenario::RestedFixed;
    if (name == "rested_combo") return Scenario::RestedCombo;
    if (name == "restless") return Scenario::Restless;
    if (name == "concentration_lab") return Scenario::ConcentrationLab;
    throw ConfigError(field, "unknown scenario '" + name + "'");
}

std::string arm_kind_name(ArmConfig::Kind k) {
    switch (k) {
        case ArmConfig::Kind::IID: return "iid";
        case ArmConfig::Kind::Markov: return "markov";
        case ArmConfig::Kind::FiniteRange: return "finite_range";
    }
    return "iid";
}

std::string reward_kind_name(BlockReward::Kind k) {
    switch (k) {
        case BlockReward::Kind::BlockMean: return "block_mean";
        case BlockReward::Kind::BlockMax: return "block_max";
        case BlockReward::Kind::PatternIndicator: return "pattern";
        case BlockReward::Kind::WeightedMean: return "weighted_mean";
    }
    return "block_mean";
}

std::string policy_kind_name(PolicyConfig::Kind k) {
    switch (k) {
        case PolicyConfig::Kind::ClassicalUcb: return "classical_ucb";
        case PolicyConfig::Kind::BlockUcb: return "block_ucb";
        case PolicyConfig::Kind::ComboUcb: return "combo_ucb";
        case PolicyConfig::Kind::RestlessUcb: return "restless_ucb";
        case PolicyConfig::Kind::Random: return "random";
        case PolicyConfig::Kind::Fixed: return "fixed";
    }
    return "classical_ucb";
}

std::string assert_kind_name(AssertConfig::Kind k) {
    switch (k) {
        case AssertConfig::Kind::RegretUnderBound: return "regret_under_bound";
        case AssertConfig::Kind::LogGrowth: return "log_growth";
        case AssertConfig::Kind::IidReduction: return "iid_reduction";
        case AssertConfig::Kind::FinalShare: return "final_share";
        case AssertConfig::Kind::TailsDominated: return "tails_dominated";
    }
    return "regret_under_bound";
}

std::string tail_mode_name(TailMode m) {
    switch (m) {
        case TailMode::Block: return "block";
        case TailMode::Rested: return "rested";
        case TailMode::Restless: return "restless";
    }
    return "block";
}

// ---- parsing ------------------------------------------------------------

enum class Section { Global, Arm, Reward, Policy, Assert, Tail };

struct Parser {
    ExperimentConfig config;
    Section section = Section::Global;
    bool saw_scenario = false;
    bool saw_policy = false;

    void header(const std::string& name) {
        if (name == "[arm]") {
            config.arms.emplace_back();
            config.arms.back().seed = 100 + config.arms.size();
            section = Section::Arm;
        } else if (name == "[reward]") {
            config.rewards.emplace_back();
            section = Section::Reward;
        } else if (name == "[policy]") {
            if (saw_policy) throw ConfigError("policy", "only one [policy] section is allowed");
            saw_policy = true;
            config.policy = PolicyConfig{};
            section = Section::Policy;
        } else if (name == "[assert]") {
            config.asserts.emplace_back();
            section = Section::Assert;
        } else if (name == "[tail]") {
            config.tails.emplace_back();
            section = Section::Tail;
        } else {
            throw ConfigError(name, "unknown section");
        }
    }

    void global_key(const std::string& key, const std::vector<std::string>& vals) {
        if (key == "scenario") {
            config.scenario = scenario_from("scenario", vals.at(0));
            saw_scenario = true;
        } else if (key == "horizon") {
            config.horizon = parse_long("horizon", vals.at(0));
        } else if (key == "seed_base") {
            config.seed_base = parse_u64("seed_base", vals.at(0));
        } else if (key == "seed_count") {
            config.seed_count = parse_long("seed_count", vals.at(0));
        } else if (key == "seeds") {
            config.seeds.clear();
            for (const auto& t : vals) config.seeds.push_back(parse_u64("seeds", t));
        } else if (key == "out") {
            config.out = vals.at(0);
        } else {
            throw ConfigError(key, "unknown key");
        }
    }

    void arm_key(const std::string& key, const std::vector<std::string>& vals) {
        auto& arm = config.arms.back();
        if (key == "kind") {
            const auto& name = vals.at(0);
            if (name == "iid") arm.kind = ArmConfig::Kind::IID;
            else if (name == "markov") arm.kind = ArmConfig::Kind::Markov;
            else if (name == "finite_range") arm.kind = ArmConfig::Kind::FiniteRange;
            else throw ConfigError("arm.kind", "unknown kind '" + name + "'");
        } else if (key == "alphabet") {
            arm.alphabet = parse_doubles("arm.alphabet", vals);
        } else if (key == "probs") {
            arm.probs = parse_doubles("arm.probs", vals);
        } else if (key == "row") {
            arm.rows.push_back(parse_doubles("arm.row", vals));
        } else if (key == "order") {
            arm.order = parse_long("arm.order", vals.at(0));
        } else if (key == "seed") {
            arm.seed = parse_u64("arm.seed", vals.at(0));
        } else {
            throw ConfigError("arm." + key, "unknown key");
        }
    }

    void reward_key(const std::string& key, const std::vector<std::string>& vals) {
        auto& reward = config.rewards.back();
        if (key == "kind") {
            const auto& name = vals.at(0);
            if (name == "block_mean") reward.kind = BlockReward::Kind::BlockMean;
            else if (name == "block_max") reward.kind = BlockReward::Kind::BlockMax;
            else if (name == "pattern") reward.kind = BlockReward::Kind::PatternIndicator;
            else if (name == "weighted_mean") reward.kind = BlockReward::Kind::WeightedMean;
            else throw ConfigError("reward.kind", "unknown kind '" + name + "'");
        } else if (key == "target") {
            reward.params = parse_doubles("reward.target", vals);
        } else if (key == "weights") {
            reward.params = parse_doubles("reward.weights", vals);
        } else {
            throw ConfigError("reward." + key, "unknown key");
        }
    }

    void policy_key(const std::string& key, const std::vector<std::string>& vals) {
        auto& policy = *config.policy;
        if (key == "kind") {
            const auto& name = vals.at(0);
            if (name == "classical_ucb") policy.kind = PolicyConfig::Kind::ClassicalUcb;
            else if (name == "block_ucb") policy.kind = PolicyConfig::Kind::BlockUcb;
            else if (name == "combo_ucb") policy.kind = PolicyConfig::Kind::ComboUcb;
            else if (name == "restless_ucb") policy.kind = PolicyConfig::Kind::RestlessUcb;
            else if (name == "random") policy.kind = PolicyConfig::Kind::Random;
            else if (name == "fixed") policy.kind = PolicyConfig::Kind::Fixed;
            else throw ConfigError("policy.kind", "unknown kind '" + name + "'");
        } else if (key == "alpha") {
            policy.alpha = parse_double("policy.alpha", vals.at(0));
        } else if (key == "m") {
            policy.m = parse_long("policy.m", vals.at(0));
        } else if (key == "b") {
            policy.b = parse_long("policy.b", vals.at(0));
        } else if (key == "s") {
            policy.s = parse_long("policy.s", vals.at(0));
        } else if (key == "mk") {
            policy.mk.clear();
            for (const auto& t : vals) policy.mk.push_back(parse_long("policy.mk", t));
        } else if (key == "arm") {
            policy.arm = static_cast<int>(parse_long("policy.arm", vals.at(0)));
        } else if (key == "seed") {
            policy.seed = parse_u64("policy.seed", vals.at(0));
        } else {
            throw ConfigError("policy." + key, "unknown key");
        }
    }

    void assert_key(const std::string& key, const std::vector<std::string>& vals) {
        auto& check = config.asserts.back();
        if (key == "kind") {
            const auto& name = vals.at(0);
            if (name == "regret_under_bound") check.kind = AssertConfig::Kind::RegretUnderBound;
            else if (name == "log_growth") check.kind = AssertConfig::Kind::LogGrowth;
            else if (name == "iid_reduction") check.kind = AssertConfig::Kind::IidReduction;
            else if (name == "final_share") check.kind = AssertConfig::Kind::FinalShare;
            else if (name == "tails_dominated") check.kind = AssertConfig::Kind::TailsDominated;
            else throw ConfigError("assert.kind", "unknown kind '" + name + "'");
        } else if (key == "min_share") {
            check.min_share = parse_double("assert.min_share", vals.at(0));
        } else if (key == "window") {
            check.window = parse_double("assert.window", vals.at(0));
        } else if (key == "from_t") {
            check.from_t = parse_long("assert.from_t", vals.at(0));
        } else if (key == "slack") {
            check.slack = parse_double("assert.slack", vals.at(0));
        } else {
            throw ConfigError("assert." + key, "unknown key");
        }
    }

    void tail_key(const std::string& key, const std::vector<std::string>& vals) {
        auto& tail = config.tails.back();
        if (key == "mode") {
            const auto& name = vals.at(0);
            if (name == "block") tail.mode = TailMode::Block;
            else if (name == "rested") tail.mode = TailMode::Rested;
            else if (name == "restless") tail.mode = TailMode::Restless;
            else throw ConfigError("tail.mode", "unknown mode '" + name + "'");
        } else if (key == "arm") {
            tail.arm = static_cast<int>(parse_long("tail.arm", vals.at(0)));
        } else if (key == "reward") {
            tail.reward = static_cast<int>(parse_long("tail.reward", vals.at(0)));
        } else if (key == "m") {
            tail.m = parse_long("tail.m", vals.at(0));
        } else if (key == "b") {
            tail.b = parse_long("tail.b", vals.at(0));
        } else if (key == "blocks") {
            tail.blocks = parse_long("tail.blocks", vals.at(0));
        } else if (key == "trials") {
            tail.trials = parse_long("tail.trials", vals.at(0));
        } else if (key == "eps") {
            tail.eps = parse_doubles("tail.eps", vals);
        } else {
            throw ConfigError("tail." + key, "unknown key");
        }
    }
};

void validate(const ExperimentConfig& config) {
    if (config.arms.empty()) throw ConfigError("arm", "at least one [arm] section is required");
    if (config.rewards.size() != 1 && config.rewards.size() != config.arms.size())
        throw ConfigError("reward", "need one [reward] section, or one per arm");
    for (const auto& arm : config.arms) {
        if (arm.alphabet.size() < 2) throw ConfigError("arm.alphabet", "need at least 2 values");
        switch (arm.kind) {
            case ArmConfig::Kind::IID:
                if (arm.probs.size() != arm.alphabet.size())
                    throw ConfigError("arm.probs", "need one probability per alphabet value");
                break;
            case ArmConfig::Kind::Markov:
                if (arm.rows.size() != arm.alphabet.size())
                    throw ConfigError("arm.row", "need one row per alphabet value");
                break;
            case ArmConfig::Kind::FiniteRange:
                if (arm.order < 1) throw ConfigError("arm.order", "order must be >= 1");
                break;
        }
    }
    const bool lab = config.scenario == Scenario::ConcentrationLab;
    if (lab) {
        if (config.policy) throw ConfigError("policy", "concentration_lab takes no policy");
        if (config.tails.empty()) throw ConfigError("tail", "concentration_lab needs [tail] sections");
        for (const auto& tail : config.tails) {
            if (tail.arm < 0 || tail.arm >= static_cast<int>(config.arms.size()))
                throw ConfigError("tail.arm", "arm index out of range");
            if (tail.reward < 0 || tail.reward >= static_cast<int>(config.rewards.size()))
                throw ConfigError("tail.reward", "reward index out of range");
        }
        for (const auto& check : config.asserts)
            if (check.kind != AssertConfig::Kind::TailsDominated)
                throw ConfigError("assert.kind", "only tails_dominated applies to concentration_lab");
        return;
    }
    if (!config.tails.empty()) throw ConfigError("tail", "[tail] sections need scenario concentration_lab");
    if (!config.policy) throw ConfigError("policy", "a [policy] section is required");
    if (config.horizon < static_cast<long>(config.arms.size()))
        throw ConfigError("horizon", "horizon must cover one pull per arm");
    const auto& policy = *config.policy;
    const bool ucb = policy.kind == PolicyConfig::Kind::ClassicalUcb ||
                     policy.kind == PolicyConfig::Kind::BlockUcb ||
                     policy.kind == PolicyConfig::Kind::ComboUcb ||
                     policy.kind == PolicyConfig::Kind::RestlessUcb;
    if (ucb && !(policy.alpha > 2.0)) throw ConfigError("policy.alpha", "alpha must be > 2");
    switch (config.scenario) {
        case Scenario::RestedFixed:
            if (policy.kind == PolicyConfig::Kind::ComboUcb ||
                policy.kind == PolicyConfig::Kind::RestlessUcb)
                throw ConfigError("policy.kind", "rested_fixed takes classical_ucb, block_ucb, random or fixed");
            break;
        case Scenario::RestedCombo:
            if (policy.kind != PolicyConfig::Kind::ComboUcb)
                throw ConfigError("policy.kind", "rested_combo requires combo_ucb");
            if (policy.s < 1) throw ConfigError("policy.s", "s must be >= 1");
            break;
        case Scenario::Restless:
            if (policy.kind != PolicyConfig::Kind::RestlessUcb &&
                policy.kind != PolicyConfig::Kind::ClassicalUcb &&
                policy.kind != PolicyConfig::Kind::Random &&
                policy.kind != PolicyConfig::Kind::Fixed)
                throw ConfigError("policy.kind", "restless takes restless_ucb or a baseline");
            if (policy.kind == PolicyConfig::Kind::RestlessUcb &&
                policy.mk.size() != config.arms.size())
                throw ConfigError("policy.mk", "need one block length per arm");
            break;
        case Scenario::ConcentrationLab:
            break;
    }
    for (const auto& check : config.asserts) {
        switch (check.kind) {
            case AssertConfig::Kind::TailsDominated:
                throw ConfigError("assert.kind", "tails_dominated requires concentration_lab");
            case AssertConfig::Kind::IidReduction:
                if (policy.kind != PolicyConfig::Kind::BlockUcb)
                    throw ConfigError("assert.kind", "iid_reduction requires a block_ucb policy");
                break;
            case AssertConfig::Kind::RegretUnderBound:
                if (policy.kind != PolicyConfig::Kind::BlockUcb &&
                    policy.kind != PolicyConfig::Kind::ComboUcb &&
                    policy.kind != PolicyConfig::Kind::RestlessUcb)
                    throw ConfigError("assert.kind", "regret_under_bound needs a policy with a bound");
                break;
            case AssertConfig::Kind::FinalShare:
                if (!(check.window > 0.0) || check.window > 1.0)
                    throw ConfigError("assert.window", "window must be in (0,1]");
                break;
            case AssertConfig::Kind::LogGrowth:
                if (!(check.slack >= 0.0)) throw ConfigError("assert.slack", "slack must be >= 0");
                break;
        }
    }
}

}  // namespace

std::vector<std::uint64_t> ExperimentConfig::seed_list() const {
    if (!seeds.empty()) return seeds;
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(seed_count));
    for (long i = 0; i < seed_count; ++i) out.push_back(seed_base + static_cast<std::uint64_t>(i));
    return out;
}

ExperimentConfig parse_config(const std::string& text) {
    Parser parser;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto toks = split_tokens(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0][0] == '[') {
            parser.header(toks[0]);
            continue;
        }
        const std::string key = toks[0];
        const std::vector<std::string> vals(toks.begin() + 1, toks.end());
        if (vals.empty()) throw ConfigError(key, "missing value");
        switch (parser.section) {
            case Section::Global: parser.global_key(key, vals); break;
            case Section::Arm: parser.arm_key(key, vals); break;
            case Section::Reward: parser.reward_key(key, vals); break;
            case Section::Policy: parser.policy_key(key, vals); break;
            case Section::Assert: parser.assert_key(key, vals); break;
            case Section::Tail: parser.tail_key(key, vals); break;
        }
    }
    if (!parser.saw_scenario) throw ConfigError("scenario", "missing required key");
    validate(parser.config);
    return parser.config;
}

std::string serialize_config(const ExperimentConfig& config) {
    std::ostringstream os;
    os << "scenario " << scenario_name(config.scenario) << '\n';
    if (config.horizon > 0) os << "horizon " << config.horizon << '\n';
    if (!config.seeds.empty()) {
        os << "seeds";
        for (auto s : config.seeds) os << ' ' << s;
        os << '\n';
    } else {
        os << "seed_base " << config.seed_base << '\n';
        os << "seed_count " << config.seed_count << '\n';
    }
    if (!config.out.empty()) os << "out " << config.out << '\n';
    for (const auto& arm : config.arms) {
        os << "\n[arm]\n";
        os << "kind " << arm_kind_name(arm.kind) << '\n';
        os << "alphabet";
        for (double v : arm.alphabet) os << ' ' << format_double(v);
        os << '\n';
        if (arm.kind == ArmConfig::Kind::IID) {
            os << "probs";
            for (double v : arm.probs) os << ' ' << format_double(v);
            os << '\n';
        } else if (arm.kind == ArmConfig::Kind::Markov) {
            for (const auto& row : arm.rows) {
                os << "row";
                for (double v : row) os << ' ' << format_double(v);
                os << '\n';
            }
        } else {
            os << "order " << arm.order << '\n';
        }
        os << "seed " << arm.seed << '\n';
    }
    for (const auto& reward : config.rewards) {
        os << "\n[reward]\n";
        os << "kind " << reward_kind_name(reward.kind) << '\n';
        if (reward.kind == BlockReward::Kind::PatternIndicator) {
            os << "target";
            for (double v : reward.params) os << ' ' << format_double(v);
            os << '\n';
        } else if (reward.kind == BlockReward::Kind::WeightedMean) {
            os << "weights";
            for (double v : reward.params) os << ' ' << format_double(v);
            os << '\n';
        }
    }
    if (config.policy) {
        const auto& policy = *config.policy;
        os << "\n[policy]\n";
        os << "kind " << policy_kind_name(policy.kind) << '\n';
        switch (policy.kind) {
            case PolicyConfig::Kind::ClassicalUcb:
            case PolicyConfig::Kind::BlockUcb:
                os << "alpha " << format_double(policy.alpha) << '\n';
                os << "m " << policy.m << '\n';
                os << "b " << policy.b << '\n';
                break;
            case PolicyConfig::Kind::ComboUcb:
                os << "alpha " << format_double(policy.alpha) << '\n';
                os << "s " << policy.s << '\n';
                break;
            case PolicyConfig::Kind::RestlessUcb:
                os << "alpha " << format_double(policy.alpha) << '\n';
                os << "mk";
                for (long v : policy.mk) os << ' ' << v;
                os << '\n';
                break;
            case PolicyConfig::Kind::Random:
                os << "m " << policy.m << '\n';
                os << "b " << policy.b << '\n';
                os << "seed " << policy.seed << '\n';
                break;
            case PolicyConfig::Kind::Fixed:
                os << "arm " << policy.arm << '\n';
                os << "m " << policy.m << '\n';
                os << "b " << policy.b << '\n';
                break;
        }
    }
    for (const auto& check : config.asserts) {
        os << "\n[assert]\n";
        os << "kind " << assert_kind_name(check.kind) << '\n';
        if (check.kind == AssertConfig::Kind::FinalShare) {
            os << "min_share " << format_double(check.min_share) << '\n';
            os << "window " << format_double(check.window) << '\n';
        } else if (check.kind == AssertConfig::Kind::LogGrowth) {
            os << "from_t " << check.from_t << '\n';
            os << "slack " << format_double(check.slack) << '\n';
        }
    }
    for (const auto& tail : config.tails) {
        os << "\n[tail]\n";
        os << "mode " << tail_mode_name(tail.mode) << '\n';
        os << "arm " << tail.arm << '\n';
        os << "reward " << tail.reward << '\n';
        os << "m " << tail.m << '\n';
        os << "b " << tail.b << '\n';
        os << "blocks " << tail.blocks << '\n';
        os << "trials " << tail.trials << '\n';
        if (!tail.eps.empty()) {
            os << "eps";
            for (double v : tail.eps) os << ' ' << format_double(v);
            os << '\n';
        }
    }
    return os.str();
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
    return serialize_config(a) == serialize_config(b);
}

std::string config_hash(const ExperimentConfig& config) {
    const std::string text = serialize_config(config);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

ArmProcess build_arm(const ArmConfig& spec) {
    Alphabet alphabet(spec.alphabet);
    switch (spec.kind) {
        case ArmConfig::Kind::IID: return ArmProcess::iid(std::move(alphabet), spec.probs, spec.seed);
        case ArmConfig::Kind::Markov:
            return ArmProcess::markov(spec.rows, std::move(alphabet), spec.seed);
        case ArmConfig::Kind::FiniteRange:
            return ArmProcess::finite_range(std::move(alphabet), spec.order, spec.seed);
    }
    throw std::logic_error("unreachable");
}

BlockReward build_reward(const RewardConfig& spec) {
    switch (spec.kind) {
        case BlockReward::Kind::BlockMean: return BlockReward::block_mean();
        case BlockReward::Kind::BlockMax: return BlockReward::block_max();
        case BlockReward::Kind::PatternIndicator: return BlockReward::pattern(spec.params);
        case BlockReward::Kind::WeightedMean: return BlockReward::weighted_mean(spec.params);
    }
    throw std::logic_error("unreachable");
}

std::vector<long> regret_checkpoints(long horizon) {
    std::vector<long> out;
    for (int j = 0;; ++j) {
        const auto v = static_cast<long>(std::ceil(std::pow(10.0, static_cast<double>(j) / 8.0)));
        if (v > horizon) break;
        if (out.empty() || v > out.back()) out.push_back(v);
    }
    if (out.empty() || out.back() != horizon) out.push_back(horizon);
    return out;
}

namespace {

// ---- running ------------------------------------------------------------

void parallel_for(long count, int jobs, const std::function<void(long)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    const int workers = static_cast<int>(std::min<long>(jobs, count));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const long i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> hold(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

void write_file_atomic(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp);
        if (!os) throw std::runtime_error("cannot open " + tmp.string());
        os << content;
    }
    fs::rename(tmp, path);
}

std::vector<BlockReward> rewards_per_arm(const ExperimentConfig& config) {
    std::vector<BlockReward> out;
    for (std::size_t k = 0; k < config.arms.size(); ++k) {
        const auto& spec = config.rewards.size() == 1 ? config.rewards[0] : config.rewards[k];
        out.push_back(build_reward(spec));
    }
    return out;
}

double mu_or_monte_carlo(const BlockReward& reward, const ArmProcess& proto, long m,
                         std::vector<std::string>& warnings, std::mutex& warn_mutex) {
    try {
        return exact_mu(reward, proto, m);
    } catch (const std::domain_error& e) {
        const auto mc = monte_carlo_mu(reward, proto, m, 200'000, 0xfa11bacc);
        std::lock_guard<std::mutex> hold(warn_mutex);
        warnings.push_back(std::string("exact value unavailable (") + e.what() +
                           "); monte carlo mean " + format_double(mc.mean) + " +- " +
                           format_double(mc.stderr_of_mean));
        return mc.mean;
    }
}

std::unique_ptr<Policy> make_policy(const ExperimentConfig& config,
                                    const std::vector<BlockReward>& rewards,
                                    const std::vector<MixingProfile>& profiles,
                                    std::uint64_t run_seed) {
    const auto& spec = *config.policy;
    switch (spec.kind) {
        case PolicyConfig::Kind::ClassicalUcb:
            return std::make_unique<ClassicalUcb>(rewards, spec.alpha, spec.m, spec.b);
        case PolicyConfig::Kind::BlockUcb:
            return std::make_unique<BlockUcb>(rewards, profiles, spec.alpha, spec.m, spec.b);
        case PolicyConfig::Kind::ComboUcb:
            return std::make_unique<ComboUcb>(rewards, profiles, spec.alpha, spec.s);
        case PolicyConfig::Kind::RestlessUcb:
            return std::make_unique<RestlessUcb>(rewards, profiles, spec.alpha, spec.mk);
        case PolicyConfig::Kind::Random:
            return std::make_unique<RandomPolicy>(rewards, spec.m, spec.b,
                                                  derive_seed(spec.seed, run_seed));
        case PolicyConfig::Kind::Fixed:
            return std::make_unique<FixedArmPolicy>(rewards, spec.arm, spec.m, spec.b);
    }
    throw std::logic_error("unreachable");
}

struct RunStats {
    std::vector<double> checkpoint_regret;
    double total = 0.0;
    std::vector<long> pulls;
    std::vector<double> shares;  // one per final_share assert
    bool reduction_ok = true;
};

double applicable_bound(const ExperimentConfig& config, const std::vector<MixingProfile>& profiles,
                        const std::vector<double>& gaps, double at) {
    const auto& policy = *config.policy;
    switch (policy.kind) {
        case PolicyConfig::Kind::BlockUcb:
            return block_ucb_regret_bound(profiles, {policy.m, policy.b}, gaps, policy.alpha, at);
        case PolicyConfig::Kind::ComboUcb:
            return combo_regret_bound(policy.s, gaps, policy.alpha, at);
        case PolicyConfig::Kind::RestlessUcb:
            return restless_regret_bound(gaps, policy.alpha, at);
        default:
            throw std::logic_error("no bound for this policy kind");
    }
}

ExperimentSummary run_lab(const ExperimentConfig& config, const RunOptions& options) {
    ExperimentSummary summary;
    summary.hash = config_hash(config);
    summary.scenario = config.scenario;
    summary.seeds = {config.seed_base};

    std::vector<ArmProcess> protos;
    for (const auto& spec : config.arms) protos.push_back(build_arm(spec));
    std::vector<BlockReward> rewards;
    for (const auto& spec : config.rewards) rewards.push_back(build_reward(spec));

    summary.tails.resize(config.tails.size(),
                         TailReport{TailMode::Block, 1, 0, 0, 0, 0.0, {}, true});
    parallel_for(static_cast<long>(config.tails.size()), options.jobs, [&](long i) {
        const auto& tail = config.tails[static_cast<std::size_t>(i)];
        const auto grid = tail.eps.empty() ? standard_eps_grid() : tail.eps;
        summary.tails[static_cast<std::size_t>(i)] = tail_estimate(
            protos[static_cast<std::size_t>(tail.arm)], rewards[static_cast<std::size_t>(tail.reward)],
            tail.mode, tail.m, tail.b, tail.blocks, grid, tail.trials,
            derive_seed(config.seed_base, static_cast<std::uint64_t>(i)));
    });

    bool all_tails = true;
    for (const auto& report : summary.tails) all_tails = all_tails && report.all_pass;
    for (const auto& check : config.asserts) {
        AssertionResult result{assert_kind_name(check.kind), all_tails,
                               all_tails ? "every grid point dominated" : "a grid point exceeded its bound"};
        summary.all_pass = summary.all_pass && result.pass;
        summary.assertions.push_back(std::move(result));
    }

    if (!config.out.empty()) {
        fs::create_directories(config.out);
        for (std::size_t i = 0; i < summary.tails.size(); ++i) {
            std::ostringstream os;
            summary.tails[i].write_csv(os);
            write_file_atomic(fs::path(config.out) / ("tail_" + std::to_string(i) + ".csv"), os.str());
        }
    }
    return summary;
}

nlohmann::json summary_json(const ExperimentConfig& config, const ExperimentSummary& summary) {
    nlohmann::json j;
    j["config_hash"] = summary.hash;
    j["scenario"] = scenario_name(config.scenario);
    j["horizon"] = summary.horizon;
    j["seeds"] = summary.seeds;
    j["checkpoints"] = summary.checkpoints;
    j["mean_cum_regret"] = summary.mean_regret;
    j["stderr_cum_regret"] = summary.stderr_regret;
    if (summary.has_bound) j["theoretical_bound"] = summary.bound;
    j["oracle_values"] = summary.oracle_values;
    j["mean_pulls"] = summary.mean_pulls;
    j["warnings"] = summary.warnings;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& a : summary.assertions)
        checks.push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
    j["assertions"] = checks;
    j["all_pass"] = summary.all_pass;
    return j;
}

}  // namespace

ExperimentSummary run_experiment(const ExperimentConfig& config, const RunOptions& options) {
    validate(config);
    if (config.scenario == Scenario::ConcentrationLab) return run_lab(config, options);

    ExperimentSummary summary;
    summary.hash = config_hash(config);
    summary.scenario = config.scenario;
    summary.horizon = config.horizon;
    summary.seeds = config.seed_list();
    summary.checkpoints = regret_checkpoints(config.horizon);

    std::vector<ArmProcess> protos;
    for (const auto& spec : config.arms) protos.push_back(build_arm(spec));
    const auto rewards = rewards_per_arm(config);
    std::vector<MixingProfile> profiles;
    for (const auto& proto : protos) profiles.push_back(proto.profile());

    // oracle values and the regret ledger ground truth
    std::mutex warn_mutex;
    RegretKind regret_kind = RegretKind::RestedBlock;
    const auto& policy_spec = *config.policy;
    if (config.scenario == Scenario::RestedCombo) {
        regret_kind = RegretKind::Combination;
        const auto combos = combo_decompositions(policy_spec.s);
        summary.oracle_values.assign(protos.size(), 0.0);
        std::vector<long> best_m(protos.size(), 1), best_b(protos.size(), 0);
        for (std::size_t k = 0; k < protos.size(); ++k) {
            std::map<long, double> mu_by_length;
            bool first = true;
            for (const auto& g : combos) {
                auto found = mu_by_length.find(g.m);
                if (found == mu_by_length.end())
                    found = mu_by_length
                                .emplace(g.m, mu_or_monte_carlo(rewards[k], protos[k], g.m,
                                                                summary.warnings, warn_mutex))
                                .first;
                const double value =
                    static_cast<double>(g.beta) / m_sum(profiles[k], g.b) * found->second;
                if (first || value > summary.oracle_values[k]) {
                    summary.oracle_values[k] = value;
                    best_m[k] = g.m;
                    best_b[k] = g.b;
                    first = false;
                }
            }
        }
        summary.oracle_best_arm = 0;
        for (std::size_t k = 1; k < protos.size(); ++k)
            if (summary.oracle_values[k] >
                summary.oracle_values[static_cast<std::size_t>(summary.oracle_best_arm)])
                summary.oracle_best_arm = static_cast<int>(k);
        summary.oracle_best_m = best_m[static_cast<std::size_t>(summary.oracle_best_arm)];
        summary.oracle_best_b = best_b[static_cast<std::size_t>(summary.oracle_best_arm)];
    } else {
        regret_kind = config.scenario == Scenario::Restless ? RegretKind::Restless
                                                            : RegretKind::RestedBlock;
        for (std::size_t k = 0; k < protos.size(); ++k) {
            const long m = config.scenario == Scenario::Restless &&
                                   policy_spec.kind == PolicyConfig::Kind::RestlessUcb
                               ? policy_spec.mk[k]
                               : policy_spec.m;
            summary.oracle_values.push_back(
                mu_or_monte_carlo(rewards[k], protos[k], m, summary.warnings, warn_mutex));
        }
        summary.oracle_best_arm = 0;
        for (std::size_t k = 1; k < protos.size(); ++k)
            if (summary.oracle_values[k] >
                summary.oracle_values[static_cast<std::size_t>(summary.oracle_best_arm)])
                summary.oracle_best_arm = static_cast<int>(k);
    }
    const RegretSpec regret = RegretSpec::from_values(regret_kind, summary.oracle_values);

    std::vector<AssertConfig> share_asserts;
    bool want_reduction = false;
    for (const auto& check : config.asserts) {
        if (check.kind == AssertConfig::Kind::FinalShare) share_asserts.push_back(check);
        if (check.kind == AssertConfig::Kind::IidReduction) want_reduction = true;
    }

    if (!config.out.empty()) fs::create_directories(config.out);

    const auto seeds = summary.seeds;
    std::vector<RunStats> stats(seeds.size());
    parallel_for(static_cast<long>(seeds.size()), options.jobs, [&](long i) {
        const std::uint64_t run_seed = seeds[static_cast<std::size_t>(i)];
        std::vector<ArmProcess> arms;
        for (const auto& proto : protos) arms.push_back(proto.fresh(run_seed));
        auto policy = make_policy(config, rewards, profiles, run_seed);
        RunRecord record = config.scenario == Scenario::Restless
                               ? run_restless(*policy, arms, config.horizon, regret, run_seed)
                               : run_rested(*policy, arms, config.horizon, regret, run_seed);
        record.config_hash = summary.hash;

        RunStats& st = stats[static_cast<std::size_t>(i)];
        st.total = record.total_regret;
        st.pulls = record.pulls;
        st.checkpoint_regret.reserve(summary.checkpoints.size());
        for (long cp : summary.checkpoints)
            st.checkpoint_regret.push_back(record.steps[static_cast<std::size_t>(cp - 1)].cum_regret);
        for (const auto& check : share_asserts) {
            const auto window =
                std::max<long>(1, static_cast<long>(std::llround(check.window * static_cast<double>(config.horizon))));
            long hits = 0;
            for (long t = config.horizon - window; t < config.horizon; ++t) {
                const auto& step = record.steps[static_cast<std::size_t>(t)];
                bool match = step.arm == summary.oracle_best_arm;
                if (config.scenario == Scenario::RestedCombo)
                    match = match && step.m == summary.oracle_best_m && step.b == summary.oracle_best_b;
                if (match) ++hits;
            }
            st.shares.push_back(static_cast<double>(hits) / static_cast<double>(window));
        }
        if (want_reduction) {
            std::vector<ArmProcess> twin;
            for (const auto& proto : protos) twin.push_back(proto.fresh(run_seed));
            ClassicalUcb baseline(rewards, policy_spec.alpha, policy_spec.m, policy_spec.b);
            RunRecord mirror = run_rested(baseline, twin, config.horizon, regret, run_seed);
            st.reduction_ok = true;
            for (std::size_t t = 0; t < record.steps.size(); ++t)
                if (record.steps[t].arm != mirror.steps[t].arm) {
                    st.reduction_ok = false;
                    break;
                }
        }
        if (!config.out.empty()) {
            std::ostringstream os;
            record.write_csv(os);
            write_file_atomic(fs::path(config.out) / ("run_" + std::to_string(run_seed) + ".csv"),
                              os.str());
            nlohmann::json rj;
            rj["seed"] = record.seed;
            rj["config_hash"] = record.config_hash;
            rj["total_regret"] = record.total_regret;
            rj["pulls"] = record.pulls;
            rj["terminal_means"] = record.terminal_means;
            write_file_atomic(fs::path(config.out) / ("run_" + std::to_string(run_seed) + ".json"),
                              rj.dump(2) + "\n");
        }
    });

    // aggregate over seeds
    const auto n = static_cast<double>(seeds.size());
    summary.mean_regret.assign(summary.checkpoints.size(), 0.0);
    summary.stderr_regret.assign(summary.checkpoints.size(), 0.0);
    for (const auto& st : stats)
        for (std::size_t j = 0; j < summary.checkpoints.size(); ++j)
            summary.mean_regret[j] += st.checkpoint_regret[j];
    for (auto& v : summary.mean_regret) v /= n;
    for (const auto& st : stats)
        for (std::size_t j = 0; j < summary.checkpoints.size(); ++j) {
            const double d = st.checkpoint_regret[j] - summary.mean_regret[j];
            summary.stderr_regret[j] += d * d;
        }
    for (auto& v : summary.stderr_regret) v = seeds.size() > 1 ? std::sqrt(v / (n * (n - 1.0))) : 0.0;
    summary.mean_pulls.assign(protos.size(), 0.0);
    for (const auto& st : stats)
        for (std::size_t k = 0; k < summary.mean_pulls.size(); ++k)
            summary.mean_pulls[k] += static_cast<double>(st.pulls[k]);
    for (auto& v : summary.mean_pulls) v /= n;

    std::vector<double> gaps;
    const double best = regret.optimal;
    for (double v : summary.oracle_values) gaps.push_back(best - v);

    const bool has_bound = policy_spec.kind == PolicyConfig::Kind::BlockUcb ||
                           policy_spec.kind == PolicyConfig::Kind::ComboUcb ||
                           policy_spec.kind == PolicyConfig::Kind::RestlessUcb;
    if (has_bound) {
        summary.bound = applicable_bound(config, profiles, gaps, static_cast<double>(config.horizon));
        summary.has_bound = true;
    }

    // assertions
    std::size_t share_index = 0;
    for (const auto& check : config.asserts) {
        AssertionResult result{assert_kind_name(check.kind), true, ""};
        switch (check.kind) {
            case AssertConfig::Kind::RegretUnderBound: {
                const double mean_total = summary.mean_regret.back();
                result.pass = mean_total <= summary.bound;
                result.detail = "mean regret " + format_double(mean_total) + " vs bound " +
                                format_double(summary.bound);
                break;
            }
            case AssertConfig::Kind::LogGrowth: {
                double prev = -1.0;
                long prev_t = 0;
                result.pass = true;
                for (std::size_t j = 0; j < summary.checkpoints.size(); ++j) {
                    const long t = summary.checkpoints[j];
                    if (t < check.from_t) continue;
                    const double ratio = summary.mean_regret[j] / std::log(static_cast<double>(t));
                    if (prev >= 0.0 && ratio > prev * (1.0 + check.slack)) {
                        result.pass = false;
                        result.detail = "regret/log t rose from " + format_double(prev) + " at t=" +
                                        std::to_string(prev_t) + " to " + format_double(ratio) +
                                        " at t=" + std::to_string(t);
                        break;
                    }
                    prev = ratio;
                    prev_t = t;
                }
                if (result.pass) result.detail = "regret/log t nonincreasing past t=" + std::to_string(check.from_t);
                break;
            }
            case AssertConfig::Kind::IidReduction: {
                result.pass = true;
                for (const auto& st : stats) result.pass = result.pass && st.reduction_ok;
                result.detail = result.pass ? "choice sequences match the classical baseline"
                                            : "choice sequences diverged from the classical baseline";
                break;
            }
            case AssertConfig::Kind::FinalShare: {
                double mean_share = 0.0;
                for (const auto& st : stats) mean_share += st.shares[share_index];
                mean_share /= n;
                ++share_index;
                result.pass = mean_share >= check.min_share;
                result.detail = "optimal choice share " + format_double(mean_share) + " vs required " +
                                format_double(check.min_share);
                break;
            }
            case AssertConfig::Kind::TailsDominated:
                break;
        }
        summary.all_pass = summary.all_pass && result.pass;
        summary.assertions.push_back(std::move(result));
    }

    if (!config.out.empty()) {
        std::ostringstream table;
        table << "t,mean_cum_regret,stderr_cum_regret,bound\n";
        for (std::size_t j = 0; j < summary.checkpoints.size(); ++j) {
            table << summary.checkpoints[j] << ',' << summary.mean_regret[j] << ','
                  << summary.stderr_regret[j] << ',';
            if (has_bound && summary.checkpoints[j] > 1)
                table << applicable_bound(config, profiles, gaps,
                                          static_cast<double>(summary.checkpoints[j]));
            table << '\n';
        }
        write_file_atomic(fs::path(config.out) / "bound_table.csv", table.str());
        write_file_atomic(fs::path(config.out) / "aggregate.json",
                          summary_json(config, summary).dump(2) + "\n");
    }
    return summary;
}

std::string bounds_report(const ExperimentConfig& config) {
    validate(config);
    std::ostringstream os;
    std::vector<ArmProcess> protos;
    for (const auto& spec : config.arms) protos.push_back(build_arm(spec));
    const auto rewards = rewards_per_arm(config);

    os << "scenario " << scenario_name(config.scenario) << "\n";
    for (std::size_t k = 0; k < protos.size(); ++k) {
        os << "\narm " << k << ": profile " << protos[k].profile().describe() << "\n";
        os << "  Lambda(t), m=1 b=1: ";
        for (long t : {1L, 10L, 100L, 1000L, 10000L})
            os << "t=" << t << ":" << format_double(lambda_sum(protos[k].profile(), {1, 1}, t)) << " ";
        os << "\n  M(b): ";
        for (long b = 1; b <= 5; ++b)
            os << "b=" << b << ":" << format_double(m_sum(protos[k].profile(), b)) << " ";
        os << "\n  restless M(b): ";
        for (long b = 1; b <= 5; ++b)
            os << "b=" << b << ":" << format_double(restless_m_sum(protos[k].profile(), b)) << " ";
        os << "\n";
    }
    if (config.scenario == Scenario::ConcentrationLab || !config.policy) return os.str();

    const auto& policy = *config.policy;
    std::vector<std::string> warnings;
    std::mutex warn_mutex;
    std::vector<double> values;
    if (config.scenario == Scenario::RestedCombo) {
        for (std::size_t k = 0; k < protos.size(); ++k) {
            double best = 0.0;
            bool first = true;
            os << "\narm " << k << " combination values (s=" << policy.s << "):\n";
            for (const auto& g : combo_decompositions(policy.s)) {
                const double mu = mu_or_monte_carlo(rewards[k], protos[k], g.m, warnings, warn_mutex);
                const double value = static_cast<double>(g.beta) / m_sum(protos[k].profile(), g.b) * mu;
                os << "  m=" << g.m << " b=" << g.b << " beta=" << g.beta
                   << " nu=" << format_double(value) << "\n";
                if (first || value > best) {
                    best = value;
                    first = false;
                }
            }
            values.push_back(best);
        }
    } else {
        for (std::size_t k = 0; k < protos.size(); ++k) {
            const long m = config.scenario == Scenario::Restless &&
                                   policy.kind == PolicyConfig::Kind::RestlessUcb
                               ? policy.mk[k]
                               : policy.m;
            values.push_back(mu_or_monte_carlo(rewards[k], protos[k], m, warnings, warn_mutex));
        }
    }
    const double best = *std::max_element(values.begin(), values.end());
    std::vector<double> gaps;
    for (double v : values) gaps.push_back(best - v);
    os << "\noracle values:";
    for (double v : values) os << ' ' << format_double(v);
    os << "\ngaps:";
    for (double g : gaps) os << ' ' << format_double(g);
    os << "\n";

    if (policy.kind == PolicyConfig::Kind::BlockUcb) {
        os << "u_k at tau=" << config.horizon << ":";
        for (std::size_t k = 0; k < protos.size(); ++k) {
            if (gaps[k] <= 0.0) {
                os << " -";
                continue;
            }
            os << ' '
               << format_double(solve_uk(protos[k].profile(), {policy.m, policy.b}, gaps[k],
                                         policy.alpha, static_cast<double>(config.horizon)));
        }
        os << "\nregret bound: "
           << format_double(block_ucb_regret_bound(
                  [&] {
                      std::vector<MixingProfile> ps;
                      for (const auto& p : protos) ps.push_back(p.profile());
                      return ps;
                  }(),
                  {policy.m, policy.b}, gaps, policy.alpha, static_cast<double>(config.horizon)))
           << "\n";
    } else if (policy.kind == PolicyConfig::Kind::ComboUcb) {
        os << "regret bound: "
           << format_double(combo_regret_bound(policy.s, gaps, policy.alpha,
                                               static_cast<double>(config.horizon)))
           << "\n";
    } else if (policy.kind == PolicyConfig::Kind::RestlessUcb) {
        os << "regret bound: "
           << format_double(restless_regret_bound(gaps, policy.alpha,
                                                  static_cast<double>(config.horizon)))
           << "\n";
    }
    for (const auto& w : warnings) os << "warning: " << w << "\n";
    return os.str();
}

namespace {

const char* kPresetSec3IidReduction = R"(scenario rested_fixed
horizon 10000
seed_base 1
seed_count 20

[arm]
kind iid
alphabet 0 1
probs 0.4 0.6
seed 101

[arm]
kind iid
alphabet 0 1
probs 0.6 0.4
seed 102

[reward]
kind block_mean

[policy]
kind block_ucb
alpha 2.5
m 1
b 0

[assert]
kind iid_reduction
)";

const char* kPresetSec3Iid = R"(scenario rested_fixed
horizon 10000
seed_base 1
seed_count 50

[arm]
kind iid
alphabet 0 1
probs 0.25 0.75
seed 101

[arm]
kind iid
alphabet 0 1
probs 0.75 0.25
seed 102

[reward]
kind block_mean

[policy]
kind block_ucb
alpha 2.5
m 1
b 0

[assert]
kind regret_under_bound

[assert]
kind log_growth
from_t 1000
slack 0.1
)";

const char* kPresetSec3Markov = R"(scenario rested_fixed
horizon 10000
seed_base 1
seed_count 50

[arm]
kind markov
alphabet 0 1
row 0.5 0.5
row 0.2 0.8
seed 101

[arm]
kind markov
alphabet 0 1
row 0.8 0.2
row 0.5 0.5
seed 102

[reward]
kind block_mean

[policy]
kind block_ucb
alpha 2.5
m 1
b 3

[assert]
kind regret_under_bound

[assert]
kind log_growth
from_t 1000
slack 0.1
)";

const char* kPresetSec4Combo = R"(scenario rested_combo
horizon 20000
seed_base 1
seed_count 50

[arm]
kind iid
alphabet 0 1
probs 0.4 0.6
seed 101

[arm]
kind markov
alphabet 0 1
row 0.93 0.07
row 0.03 0.97
seed 102

[reward]
kind block_mean

[policy]
kind combo_ucb
alpha 2.5
s 4

[assert]
kind regret_under_bound

[assert]
kind final_share
min_share 0.9
window 0.1

[assert]
kind log_growth
from_t 1000
slack 0.1
)";

const char* kPresetSec5Restless = R"(scenario restless
horizon 10000
seed_base 1
seed_count 50

[arm]
kind markov
alphabet 0 1
row 0.5 0.5
row 0.2 0.8
seed 101

[arm]
kind markov
alphabet 0 1
row 0.8 0.2
row 0.5 0.5
seed 102

[reward]
kind block_mean

[policy]
kind restless_ucb
alpha 2.5
mk 2 3

[assert]
kind regret_under_bound

[assert]
kind log_growth
from_t 1000
slack 0.1
)";

const char* kPresetConcLab = R"(scenario concentration_lab
seed_base 7
seed_count 1

[arm]
kind iid
alphabet 0 1
probs 0.5 0.5
seed 101

[arm]
kind markov
alphabet 0 1
row 0.9 0.1
row 0.2 0.8
seed 102

[reward]
kind block_mean

[tail]
mode block
arm 0
reward 0
m 1
b 0
blocks 100
trials 100000

[tail]
mode rested
arm 0
reward 0
m 1
b 0
blocks 100
trials 100000

[tail]
mode restless
arm 0
reward 0
m 1
b 0
blocks 100
trials 100000

[tail]
mode block
arm 1
reward 0
m 1
b 7
blocks 100
trials 100000

[tail]
mode rested
arm 1
reward 0
m 1
b 7
blocks 100
trials 100000

[tail]
mode restless
arm 1
reward 0
m 1
b 7
blocks 100
trials 100000

[assert]
kind tails_dominated
)";

}  // namespace

const std::vector<std::pair<std::string, std::string>>& presets() {
    static const std::vector<std::pair<std::string, std::string>> list = {
        {"sec3_iid_reduction", kPresetSec3IidReduction},
        {"sec3_iid", kPresetSec3Iid},
        {"sec3_markov", kPresetSec3Markov},
        {"sec4_combo", kPresetSec4Combo},
        {"sec5_restless", kPresetSec5Restless},
        {"conc_lab", kPresetConcLab},
    };
    return list;
}

const std::string* find_preset(const std::string& name) {
    for (const auto& [key, text] : presets())
        if (key == name) return &text;
    return nullptr;
}

}  // namespace mixbandit
