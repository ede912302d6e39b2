// Command line front end: run experiment configs, inspect presets, drive the
// concentration lab, and print bound tables without simulating.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mixbandit/experiments.hpp"

namespace {

std::string load_config_text(const std::string& name) {
    std::ifstream is(name);
    if (is) {
        std::ostringstream os;
        os << is.rdbuf();
        return os.str();
    }
    if (const std::string* preset = mixbandit::find_preset(name)) return *preset;
    throw std::runtime_error("'" + name + "' is neither a config file nor a preset name");
}

struct CommonFlags {
    std::string out;
    std::uint64_t seed_base = 0;
    long seed_count = 0;
    int jobs = 1;
    bool has_seed_base = false;
    bool has_seed_count = false;
};

void apply_flags(mixbandit::ExperimentConfig& config, const CommonFlags& flags) {
    if (!flags.out.empty()) config.out = flags.out;
    if (flags.has_seed_base) {
        config.seed_base = flags.seed_base;
        config.seeds.clear();
    }
    if (flags.has_seed_count) {
        config.seed_count = flags.seed_count;
        config.seeds.clear();
    }
}

int report(const mixbandit::ExperimentSummary& summary) {
    for (const auto& w : summary.warnings) std::cout << "warning: " << w << "\n";
    if (!summary.mean_regret.empty()) {
        std::cout << "mean cumulative regret at horizon: " << summary.mean_regret.back() << "\n";
        if (summary.has_bound) std::cout << "theoretical bound: " << summary.bound << "\n";
    }
    for (const auto& tail : summary.tails) {
        std::cout << "tail report (m=" << tail.m << " b=" << tail.b << " blocks=" << tail.blocks
                  << "): " << (tail.all_pass ? "dominated" : "EXCEEDED") << "\n";
    }
    for (const auto& a : summary.assertions)
        std::cout << (a.pass ? "PASS " : "FAIL ") << a.name << ": " << a.detail << "\n";
    return summary.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"phi-mixing bandit simulation harness"};
    app.require_subcommand(1);

    std::string config_name;
    CommonFlags flags;

    auto add_common = [&](CLI::App* cmd, bool with_out) {
        cmd->add_option("config", config_name, "config file path or preset name")->required();
        if (with_out) cmd->add_option("--out", flags.out, "output directory for artifacts");
        cmd->add_option("--seed-base", flags.seed_base, "override the first seed")
            ->each([&](const std::string&) { flags.has_seed_base = true; });
        cmd->add_option("--seed-count", flags.seed_count, "override the number of seeds")
            ->each([&](const std::string&) { flags.has_seed_count = true; });
        cmd->add_option("--jobs", flags.jobs, "worker threads for the seed matrix");
    };

    auto* run_cmd = app.add_subcommand("run", "execute a simulation config");
    add_common(run_cmd, true);

    auto* lab_cmd = app.add_subcommand("conc-lab", "run a concentration-lab config");
    add_common(lab_cmd, true);

    auto* bounds_cmd = app.add_subcommand("bounds", "print tail-sum and regret-bound tables");
    bounds_cmd->add_option("config", config_name, "config file path or preset name")->required();

    auto* presets_cmd = app.add_subcommand("presets", "built-in configs");
    auto* presets_list = presets_cmd->add_subcommand("list", "list preset names");
    std::string preset_name;
    auto* presets_show = presets_cmd->add_subcommand("show", "print a preset config");
    presets_show->add_option("name", preset_name, "preset name")->required();
    presets_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (presets_list->parsed()) {
            for (const auto& [name, text] : mixbandit::presets()) std::cout << name << "\n";
            return 0;
        }
        if (presets_show->parsed()) {
            const std::string* text = mixbandit::find_preset(preset_name);
            if (!text) {
                std::cerr << "unknown preset '" << preset_name << "'\n";
                return 2;
            }
            std::cout << *text;
            return 0;
        }
        if (bounds_cmd->parsed()) {
            auto config = mixbandit::parse_config(load_config_text(config_name));
            std::cout << mixbandit::bounds_report(config);
            return 0;
        }
        auto config = mixbandit::parse_config(load_config_text(config_name));
        apply_flags(config, flags);
        if (lab_cmd->parsed() && config.scenario != mixbandit::Scenario::ConcentrationLab) {
            std::cerr << "conc-lab requires a concentration_lab config\n";
            return 2;
        }
        mixbandit::RunOptions options;
        options.jobs = flags.jobs;
        const auto summary = mixbandit::run_experiment(config, options);
        return report(summary);
    } catch (const mixbandit::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
