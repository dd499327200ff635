#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bondspan/bonds.hpp"
#include "bondspan/instance.hpp"
#include "bondspan/matroid_analysis.hpp"
#include "bondspan/montecarlo.hpp"
#include "bondspan/report.hpp"
#include "bondspan/sam.hpp"
#include "bondspan/tight.hpp"
#include "bondspan/verify.hpp"

namespace {

// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 invalid instance, 4 size guard.
enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInvalidInstance = 3, kSizeGuard = 4 };

uint64_t resolve_seed(const std::optional<uint64_t>& flag_seed) {
    if (flag_seed) return *flag_seed;
    const char* env = std::getenv("BONDSPAN_SEED");
    if (!env || !*env) return 0;
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0') {
        std::cerr << "error: usage: BONDSPAN_SEED must be a decimal unsigned 64-bit integer\n";
        std::exit(kUsage);
    }
    return (uint64_t)v;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw bondspan::ValidationError("cannot write output file: " + path);
    out << text;
}

int run_analyze(const std::string& input, bool exact, std::optional<long long> mc_samples,
                const std::optional<uint64_t>& seed_flag, int exact_guard,
                const std::string& output) {
    bondspan::Instance inst = bondspan::load_instance(input);
    if (!exact && !mc_samples) {
        if (inst.all_exponential())
            exact = true;
        else {
            std::cerr << "error: usage: non-exponential instance needs --mc-samples\n";
            return kUsage;
        }
    }
    bondspan::AnalysisReport rep = bondspan::analyze_instance(inst, exact, mc_samples,
                                                              resolve_seed(seed_flag), exact_guard);
    emit(bondspan::report_to_json(rep).dump(2) + "\n", output);
    return kOk;
}

int run_simulate(const std::string& input, long long mc_samples,
                 const std::optional<uint64_t>& seed_flag, bool adaptive,
                 const std::string& output) {
    bondspan::Instance inst = bondspan::load_instance(input);
    bondspan::AnalysisReport rep =
        bondspan::analyze_instance(inst, false, mc_samples, resolve_seed(seed_flag));
    nlohmann::ordered_json j = bondspan::report_to_json(rep);
    if (adaptive) j["e_adaptive"] = bondspan::adaptive_expected_min(inst);
    emit(j.dump(2) + "\n", output);
    return kOk;
}

int run_worst_case(const std::string& input, const std::vector<double>& scales, int exact_guard,
                   const std::string& csv_path) {
    bondspan::Instance inst = bondspan::load_instance(input);
    if (scales.empty()) {
        std::cerr << "error: usage: --scale-list must not be empty\n";
        return kUsage;
    }
    bondspan::BondResult bond = bondspan::largest_bond(inst.graph);
    std::vector<bondspan::SweepRow> rows = bondspan::tight_sweep(inst.graph, scales, exact_guard);
    std::cerr << "b=" << bond.size << " bond_witness=[";
    for (size_t i = 0; i < bond.witness.size(); ++i)
        std::cerr << (i ? "," : "") << inst.label(bond.witness[i]);
    std::cerr << "]\n";
    emit(bondspan::sweep_csv(rows, bond.size, inst.name), csv_path);
    return kOk;
}

int run_matroid(const std::string& input, int exact_guard, const std::string& output) {
    bondspan::MatroidInstance inst = bondspan::load_matroid_instance(input);
    bondspan::AnalysisReport rep = bondspan::analyze_matroid_instance(inst, exact_guard);
    emit(bondspan::report_to_json(rep).dump(2) + "\n", output);
    return kOk;
}

int run_verify(const std::string& suite, const bondspan::VerifyOptions& opts,
               const std::string& counterexample_path) {
    std::vector<bondspan::SuiteCheck> checks;
    auto append = [&](std::vector<bondspan::SuiteCheck> more) {
        for (auto& c : more) checks.push_back(std::move(c));
    };
    if (suite == "graphs" || suite == "all") append(bondspan::verify_graphs(opts));
    if (suite == "stochastic" || suite == "all") append(bondspan::verify_stochastic(opts));
    if (suite == "matroids" || suite == "all") append(bondspan::verify_matroids(opts));

    bool all_pass = true;
    std::string first_counterexample;
    for (const bondspan::SuiteCheck& c : checks) {
        std::cout << (c.pass() ? "PASS" : "FAIL") << " " << c.name << ": cases=" << c.cases
                  << " failures=" << c.failures
                  << " worst_residual=" << bondspan::format_sig12(c.worst) << "\n";
        if (!c.pass() && first_counterexample.empty()) first_counterexample = c.counterexample;
        all_pass = all_pass && c.pass();
    }
    if (!all_pass) {
        if (!first_counterexample.empty()) {
            std::ofstream out(counterexample_path);
            out << first_counterexample << "\n";
            std::cerr << "error: verification: first counterexample written to "
                      << counterexample_path << "\n";
        }
        return kVerifyFailed;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-sample spanning tree analysis: SAM vs the distribution-aware optimum"};
    app.require_subcommand(1);

    std::string input, output, csv_path;
    std::optional<uint64_t> seed_flag;
    std::optional<long long> mc_samples;
    bool exact = false, adaptive = false;
    int exact_guard = bondspan::kDefaultExactGuard;
    std::vector<double> scales;
    std::string suite = "all";
    std::string counterexample_path = "counterexample.json";
    bondspan::VerifyOptions vopts;
    long long simulate_samples = 100000;

    auto* analyze = app.add_subcommand("analyze", "Full report for a graph instance file");
    analyze->add_option("input", input, "instance JSON file")->required();
    analyze->add_flag("--exact", exact, "exact E[SAM] by contraction recursion");
    analyze->add_option("--mc-samples", mc_samples, "Monte Carlo draws for E[SAM]");
    analyze->add_option("--seed", seed_flag, "RNG seed (default: BONDSPAN_SEED or 0)");
    analyze->add_option("--exact-max-edges", exact_guard, "edge guard for the exact recursion");
    analyze->add_option("--output", output, "write the report here instead of stdout");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo report (works for discrete weights)");
    simulate->add_option("input", input, "instance JSON file")->required();
    simulate->add_option("--mc-samples", simulate_samples, "Monte Carlo draws");
    simulate->add_option("--seed", seed_flag, "RNG seed (default: BONDSPAN_SEED or 0)");
    simulate->add_flag("--adaptive", adaptive, "also report E[min over trees] (discrete only)");
    simulate->add_option("--output", output, "write the report here instead of stdout");

    auto* worst = app.add_subcommand("worst-case", "Sweep tight rate constructions over scales");
    worst->add_option("input", input, "instance JSON file (graph structure is used)")->required();
    worst->add_option("--scale-list", scales, "comma-separated scale values")
        ->required()
        ->delimiter(',');
    worst->add_option("--exact-max-edges", exact_guard, "edge guard for the exact recursion");
    worst->add_option("--csv", csv_path, "write the sweep CSV here instead of stdout");

    auto* matroid = app.add_subcommand("matroid", "Report for a matroid instance file");
    matroid->add_option("input", input, "matroid JSON file")->required();
    matroid->add_option("--exact-max-edges", exact_guard, "element guard for the exact recursion");
    matroid->add_option("--output", output, "write the report here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Run the invariant suites");
    verify->add_option("--suite", suite, "graphs|stochastic|matroids|all")
        ->check(CLI::IsMember({"graphs", "stochastic", "matroids", "all"}));
    verify->add_option("--max-edges", vopts.max_edges, "edge bound for the graph families");
    verify->add_option("--trials", vopts.trials, "random rate vectors per graph");
    verify->add_option("--conditional-accepted", vopts.conditional_accepted,
                       "accepted rejection samples per edge");
    verify->add_option("--seed", seed_flag, "RNG seed (default: BONDSPAN_SEED or 0)");
    verify->add_option("--counterexample", counterexample_path,
                       "where to write the first failing instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(input, exact, mc_samples, seed_flag, exact_guard, output);
        if (app.got_subcommand(simulate))
            return run_simulate(input, simulate_samples, seed_flag, adaptive, output);
        if (app.got_subcommand(worst))
            return run_worst_case(input, scales, exact_guard, csv_path);
        if (app.got_subcommand(matroid)) return run_matroid(input, exact_guard, output);
        if (app.got_subcommand(verify)) {
            vopts.seed = resolve_seed(seed_flag);
            return run_verify(suite, vopts, counterexample_path);
        }
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return kUsage;
    } catch (const bondspan::SizeGuardError& e) {
        std::cerr << "error: size-guard: " << e.what() << "\n";
        return kSizeGuard;
    } catch (const bondspan::DisconnectedError& e) {
        std::cerr << "error: disconnected: " << e.what() << "\n";
        return kInvalidInstance;
    } catch (const bondspan::Error& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return kInvalidInstance;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return kInvalidInstance;
    }
    return kUsage;
}
