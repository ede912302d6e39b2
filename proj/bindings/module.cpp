// Python bindings for the main operations: mixing tail sums, process
// generators, block rewards, ground-truth tables, tail verification and the
// config-driven experiment runner.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mixbandit/experiments.hpp"
#include "mixbandit/mixing_math.hpp"
#include "mixbandit/oracle.hpp"
#include "mixbandit/processes.hpp"
#include "mixbandit/rewards.hpp"

namespace py = pybind11;
using namespace mixbandit;

namespace {

TailMode tail_mode_from(const std::string& name) {
    if (name == "block") return TailMode::Block;
    if (name == "rested") return TailMode::Rested;
    if (name == "restless") return TailMode::Restless;
    throw std::invalid_argument("mode must be block, rested or restless");
}

MonotoneMap make_map(std::function<double(double)> fwd, std::function<double(double)> inv) {
    MonotoneMap map;
    map.fwd = std::move(fwd);
    if (inv) map.inv = std::move(inv);
    return map;
}

}  // namespace

PYBIND11_MODULE(mixbandit, m) {
    m.doc() = "Simulation toolkit for bandits with stationary mixing arms";

    py::class_<MixingProfile>(m, "MixingProfile")
        .def_static("zero", &MixingProfile::zero)
        .def_static("finite_range", &MixingProfile::finite_range, py::arg("range"), py::arg("cap"))
        .def_static("geometric", &MixingProfile::geometric, py::arg("c"), py::arg("rho"))
        .def_static("algebraic", &MixingProfile::algebraic, py::arg("phi0"), py::arg("p"))
        .def_static("tabulated", &MixingProfile::tabulated, py::arg("values"))
        .def("phi", &MixingProfile::phi, py::arg("n"))
        .def("tail_sum", &MixingProfile::tail_sum, py::arg("n"))
        .def("__repr__", &MixingProfile::describe);

    m.def(
        "lambda_sum",
        [](const MixingProfile& p, long mm, long b, long t) { return lambda_sum(p, {mm, b}, t); },
        py::arg("profile"), py::arg("m"), py::arg("b"), py::arg("t"));
    m.def(
        "algebraic_lambda_bound",
        [](double phi0, double p, long mm, long b, long tau) {
            return algebraic_lambda_bound(phi0, p, {mm, b}, tau);
        },
        py::arg("phi0"), py::arg("p"), py::arg("m"), py::arg("b"), py::arg("tau"));
    m.def("m_sum", &m_sum, py::arg("profile"), py::arg("b"));
    m.def("restless_m_sum", &restless_m_sum, py::arg("profile"), py::arg("b"));
    m.def("rested_skip_map", &rested_skip_map, py::arg("m"), py::arg("b"), py::arg("t"));
    m.def("restless_skip_map", &restless_skip_map, py::arg("m"), py::arg("b"), py::arg("t"));
    m.def("kappa_map", &kappa_map, py::arg("m"), py::arg("b"), py::arg("q"));
    m.def("divisor_weight", &divisor_weight, py::arg("s"));
    m.def(
        "solve_uk",
        [](const MixingProfile& p, long mm, long b, double delta, double alpha, double tau) {
            return solve_uk(p, {mm, b}, delta, alpha, tau);
        },
        py::arg("profile"), py::arg("m"), py::arg("b"), py::arg("delta"), py::arg("alpha"),
        py::arg("tau"));
    m.def(
        "generic_regret_bound",
        [](std::function<double(double)> theta, std::function<double(double)> theta_inv,
           std::function<double(double)> gamma, std::function<double(double)> gamma_inv,
           const std::vector<double>& gaps, double alpha, double tau) {
            return generic_regret_bound(make_map(std::move(theta), std::move(theta_inv)),
                                        make_map(std::move(gamma), std::move(gamma_inv)), gaps,
                                        alpha, tau);
        },
        py::arg("theta"), py::arg("theta_inv"), py::arg("gamma"), py::arg("gamma_inv"),
        py::arg("gaps"), py::arg("alpha"), py::arg("tau"));
    m.def(
        "block_ucb_regret_bound",
        [](const std::vector<MixingProfile>& profiles, long mm, long b,
           const std::vector<double>& gaps, double alpha, double tau) {
            return block_ucb_regret_bound(profiles, {mm, b}, gaps, alpha, tau);
        },
        py::arg("profiles"), py::arg("m"), py::arg("b"), py::arg("gaps"), py::arg("alpha"),
        py::arg("tau"));
    m.def("combo_regret_bound", &combo_regret_bound, py::arg("s"), py::arg("gaps"),
          py::arg("alpha"), py::arg("t"));
    m.def("restless_regret_bound", &restless_regret_bound, py::arg("gaps"), py::arg("alpha"),
          py::arg("t"));

    py::class_<ArmProcess>(m, "ArmProcess")
        .def_static(
            "iid",
            [](std::vector<double> alphabet, std::vector<double> probs, std::uint64_t seed) {
                return ArmProcess::iid(Alphabet(std::move(alphabet)), std::move(probs), seed);
            },
            py::arg("alphabet"), py::arg("probs"), py::arg("seed"))
        .def_static(
            "markov",
            [](std::vector<std::vector<double>> rows, std::vector<double> alphabet,
               std::uint64_t seed) {
                return ArmProcess::markov(std::move(rows), Alphabet(std::move(alphabet)), seed);
            },
            py::arg("rows"), py::arg("alphabet"), py::arg("seed"))
        .def_static(
            "finite_range",
            [](std::vector<double> alphabet, long order, std::uint64_t seed) {
                return ArmProcess::finite_range(Alphabet(std::move(alphabet)), order, seed);
            },
            py::arg("alphabet"), py::arg("order"), py::arg("seed"))
        .def("emit", py::overload_cast<long>(&ArmProcess::emit), py::arg("n"))
        .def("skip", &ArmProcess::skip, py::arg("n"))
        .def_property_readonly("clock", &ArmProcess::clock)
        .def_property_readonly("stationary", &ArmProcess::stationary)
        .def_property_readonly("doeblin", &ArmProcess::doeblin)
        .def_property_readonly("profile", &ArmProcess::profile)
        .def("clone_reset", &ArmProcess::clone_reset)
        .def("fresh", &ArmProcess::fresh, py::arg("tag"));

    py::class_<PhiEstimate>(m, "PhiEstimate")
        .def_readonly("value", &PhiEstimate::value)
        .def_readonly("slack", &PhiEstimate::slack)
        .def_readonly("low_counts", &PhiEstimate::low_counts);
    m.def("empirical_phi", &empirical_phi, py::arg("arm"), py::arg("n"), py::arg("samples"));

    py::class_<BlockReward>(m, "BlockReward")
        .def_static("block_mean", &BlockReward::block_mean)
        .def_static("block_max", &BlockReward::block_max)
        .def_static("pattern", &BlockReward::pattern, py::arg("target"))
        .def_static("weighted_mean", &BlockReward::weighted_mean, py::arg("weights"))
        .def(
            "evaluate",
            [](const BlockReward& r, const std::vector<double>& block) {
                return r.evaluate(block);
            },
            py::arg("block"));
    m.def("exact_mu", &exact_mu, py::arg("reward"), py::arg("arm"), py::arg("m"));

    py::class_<ValueEntry>(m, "ValueEntry")
        .def_readonly("arm", &ValueEntry::arm)
        .def_readonly("m", &ValueEntry::m)
        .def_readonly("b", &ValueEntry::b)
        .def_readonly("beta", &ValueEntry::beta)
        .def_readonly("mu", &ValueEntry::mu)
        .def_readonly("msum", &ValueEntry::msum)
        .def_readonly("value", &ValueEntry::value);
    py::class_<ValueTable>(m, "ValueTable")
        .def_readonly("s", &ValueTable::s)
        .def_readonly("entries", &ValueTable::entries)
        .def_readonly("best_arm", &ValueTable::best_arm)
        .def_readonly("best_m", &ValueTable::best_m)
        .def_readonly("best_b", &ValueTable::best_b)
        .def_readonly("best_value", &ValueTable::best_value)
        .def_readonly("arm_best_value", &ValueTable::arm_best_value)
        .def_readonly("gaps", &ValueTable::gaps);
    m.def("value_table", &value_table, py::arg("arms"), py::arg("rewards"), py::arg("s"));

    py::class_<TailPoint>(m, "TailPoint")
        .def_readonly("eps", &TailPoint::eps)
        .def_readonly("empirical", &TailPoint::empirical)
        .def_readonly("wilson_hi", &TailPoint::wilson_hi)
        .def_readonly("bound", &TailPoint::bound)
        .def_readonly("bound_two_sided", &TailPoint::bound_two_sided)
        .def_readonly("passed", &TailPoint::pass);
    py::class_<TailReport>(m, "TailReport")
        .def_readonly("m", &TailReport::m)
        .def_readonly("b", &TailReport::b)
        .def_readonly("blocks", &TailReport::blocks)
        .def_readonly("trials", &TailReport::trials)
        .def_readonly("mu", &TailReport::mu)
        .def_readonly("points", &TailReport::points)
        .def_readonly("all_pass", &TailReport::all_pass);
    m.def(
        "tail_estimate",
        [](const ArmProcess& arm, const BlockReward& reward, const std::string& mode, long mm,
           long b, long blocks, const std::vector<double>& eps, long trials, std::uint64_t seed) {
            const auto grid = eps.empty() ? standard_eps_grid() : eps;
            return tail_estimate(arm, reward, tail_mode_from(mode), mm, b, blocks, grid, trials,
                                 seed);
        },
        py::arg("arm"), py::arg("reward"), py::arg("mode"), py::arg("m"), py::arg("b"),
        py::arg("blocks"), py::arg("eps") = std::vector<double>{}, py::arg("trials") = 100'000,
        py::arg("seed") = 7);

    py::class_<AssertionResult>(m, "AssertionResult")
        .def_readonly("name", &AssertionResult::name)
        .def_readonly("passed", &AssertionResult::pass)
        .def_readonly("detail", &AssertionResult::detail);
    py::class_<ExperimentSummary>(m, "ExperimentSummary")
        .def_readonly("hash", &ExperimentSummary::hash)
        .def_readonly("horizon", &ExperimentSummary::horizon)
        .def_readonly("seeds", &ExperimentSummary::seeds)
        .def_readonly("checkpoints", &ExperimentSummary::checkpoints)
        .def_readonly("mean_regret", &ExperimentSummary::mean_regret)
        .def_readonly("stderr_regret", &ExperimentSummary::stderr_regret)
        .def_readonly("bound", &ExperimentSummary::bound)
        .def_readonly("has_bound", &ExperimentSummary::has_bound)
        .def_readonly("oracle_values", &ExperimentSummary::oracle_values)
        .def_readonly("oracle_best_arm", &ExperimentSummary::oracle_best_arm)
        .def_readonly("oracle_best_m", &ExperimentSummary::oracle_best_m)
        .def_readonly("oracle_best_b", &ExperimentSummary::oracle_best_b)
        .def_readonly("mean_pulls", &ExperimentSummary::mean_pulls)
        .def_readonly("tails", &ExperimentSummary::tails)
        .def_readonly("assertions", &ExperimentSummary::assertions)
        .def_readonly("warnings", &ExperimentSummary::warnings)
        .def_readonly("all_pass", &ExperimentSummary::all_pass);

    m.def(
        "run_config",
        [](const std::string& text, int jobs) {
            const auto config = parse_config(text);
            RunOptions options;
            options.jobs = jobs;
            return run_experiment(config, options);
        },
        py::arg("text"), py::arg("jobs") = 1);
    m.def("canonical_config", [](const std::string& text) {
        return serialize_config(parse_config(text));
    });
    m.def("config_hash", [](const std::string& text) { return config_hash(parse_config(text)); });
    m.def("bounds_report", [](const std::string& text) {
        return bounds_report(parse_config(text));
    });
    m.def("presets", [] {
        py::dict out;
        for (const auto& [name, text] : presets()) out[py::str(name)] = text;
        return out;
    });
}
