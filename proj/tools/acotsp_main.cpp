// acotsp: generate TSP instances, run one ACO solve, or reproduce the
// benchmark suites. Exit codes: 0 ok, 1 runtime failure, 2 usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aco/harness.hpp"
#include "aco/instance.hpp"
#include "aco/solvers.hpp"
#include "aco/tsplib.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct GenOptions {
    int n = 50;
    std::uint64_t seed = 1;
    double lo = -100.0;
    double hi = 100.0;
    std::string out;
};

struct SolveOptions {
    std::string instance;
    std::string algo = "beam";
    long iterations = 0;
    double seconds = 0.0;
    std::uint64_t seed = 1;
    bool json = false;
    aco::AcoParams params;
};

struct BenchOptions {
    std::string protocol = "iterations";
    std::vector<int> sizes;
    int trials = 10;
    double seconds = 0.0;
    long iterations = 0;
    std::vector<std::string> files;
    std::vector<std::string> algos;
    bool equiv_width = false;
    bool no_equiv_width = false;
    std::string out;
    std::string format = "csv";
    bool parallel_trials = false;
    std::uint64_t seed_base = 1;
    int ants = 10;
    int beam_width = 10;
};

int cmd_gen(const GenOptions& opt) {
    const aco::TspInstance inst = aco::random_instance(opt.n, opt.seed, opt.lo, opt.hi);
    aco::tsplib::save_file(inst, opt.out);
    std::cout << opt.out << "\n";
    return kExitOk;
}

int cmd_solve(const SolveOptions& opt) {
    const aco::TspInstance inst = aco::tsplib::load_file(opt.instance);
    const aco::StopPredicate stop = opt.seconds > 0.0
                                        ? aco::StopPredicate::wall_clock(opt.seconds)
                                        : aco::StopPredicate::max_iterations(
                                              opt.iterations > 0 ? opt.iterations : 5);
    const aco::SolverResult result = aco::solve(inst, opt.algo, opt.params, stop, opt.seed);
    const double kpp =
        static_cast<double>(result.partial_paths_considered) / std::max(result.elapsed_s, 1e-12) /
        1000.0;

    if (opt.json) {
        nlohmann::json doc{{"instance", inst.name},
                           {"algorithm", result.algorithm},
                           {"length", result.best_tour.length},
                           {"iterations", result.iterations},
                           {"elapsed_s", result.elapsed_s},
                           {"partial_paths", result.partial_paths_considered},
                           {"kpp_s", kpp},
                           {"seed", result.seed},
                           {"tour", result.best_tour.order}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "instance:       " << inst.name << " (" << inst.size() << " nodes)\n"
                  << "algorithm:      " << result.algorithm << "\n"
                  << "best length:    " << result.best_tour.length << "\n"
                  << "iterations:     " << result.iterations << "\n"
                  << "elapsed:        " << result.elapsed_s << " s\n"
                  << "partial paths:  " << result.partial_paths_considered << "\n"
                  << "kpp/s:          " << kpp << "\n"
                  << "seed:           " << result.seed << "\n";
    }
    return kExitOk;
}

int cmd_bench(const BenchOptions& opt) {
    using aco::bench::ExperimentSpec;
    ExperimentSpec spec;
    if (opt.protocol == "duration") {
        spec.protocol = ExperimentSpec::Protocol::FixedDuration;
    } else if (opt.protocol == "iterations") {
        spec.protocol = ExperimentSpec::Protocol::FixedIterations;
    } else if (opt.protocol == "tsplib") {
        spec.protocol = ExperimentSpec::Protocol::TsplibSuite;
    } else {
        throw CLI::ValidationError("--protocol must be duration, iterations or tsplib");
    }

    // gBeam-k_equiv x1 is part of the fixed-iteration comparison by default.
    bool include_equiv = spec.protocol == ExperimentSpec::Protocol::FixedIterations;
    if (opt.equiv_width) include_equiv = true;
    if (opt.no_equiv_width) include_equiv = false;

    spec.algorithms = aco::bench::make_configs(spec.protocol, opt.algos, opt.beam_width, opt.ants,
                                               include_equiv);
    spec.sizes = opt.sizes.empty() ? std::vector<int>{50, 250, 500, 1000} : opt.sizes;
    spec.trials = opt.trials;
    spec.seconds = opt.seconds;
    spec.iterations = opt.iterations;
    spec.seed_base = opt.seed_base;
    spec.parallel_trials = opt.parallel_trials;
    for (const std::string& f : opt.files) {
        spec.files.emplace_back(f);
    }

    const aco::bench::SuiteResult suite = aco::bench::run_suite(spec);
    if (suite.records.empty()) {
        std::cerr << "all trials failed\n";
        return kExitFailure;
    }

    const auto write_records = [&](std::ostream& sink) {
        if (opt.format == "json") {
            aco::bench::emit_json(suite.records, sink);
        } else {
            aco::bench::emit_csv(suite.records, sink);
        }
    };

    const std::vector<aco::bench::SummaryRow> rows = aco::bench::summarize(suite.records);
    if (!opt.out.empty()) {
        std::ofstream out(opt.out);
        if (!out) {
            throw std::runtime_error("cannot open output file: " + opt.out);
        }
        write_records(out);
        std::cout << aco::bench::format_summary_table(rows);
        std::cout << "records written to " << opt.out << "\n";
    } else {
        // records go to stdout for piping; keep the table on stderr
        write_records(std::cout);
        std::cerr << aco::bench::format_summary_table(rows);
    }
    if (suite.failed_trials > 0) {
        std::cerr << suite.failed_trials << " trial(s) failed\n";
    }
    return kExitOk;
}

void add_param_flags(CLI::App* cmd, aco::AcoParams& params) {
    cmd->add_option("--ants", params.n_ants, "colony size")->check(CLI::PositiveNumber);
    cmd->add_option("--beam-width", params.beam_width, "beam width k")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--alpha", params.alpha, "pheromone exponent");
    cmd->add_option("--beta", params.beta, "inverse-distance exponent");
    cmd->add_option("--rho", params.rho, "evaporation rate in (0,1)");
    cmd->add_option("--deposit", params.q_deposit, "pheromone deposit constant");
    cmd->add_option("--tau-min", params.tau_min, "MMAS lower pheromone bound");
    cmd->add_option("--tau-max", params.tau_max, "MMAS upper pheromone bound");
    cmd->add_option("--tau-init", params.tau_init, "initial pheromone level");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ACO / Beam-ACO / gBeam-ACO TSP solver and benchmark harness"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random EUC_2D instance file");
    gen_cmd->add_option("--n", gen.n, "number of points")->required();
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--lo", gen.lo, "coordinate lower bound");
    gen_cmd->add_option("--hi", gen.hi, "coordinate upper bound");
    gen_cmd->add_option("--out", gen.out, "output path")->required();

    SolveOptions solve;
    CLI::App* solve_cmd = app.add_subcommand("solve", "run one solver on a TSPLIB file");
    solve_cmd->add_option("--instance", solve.instance, "TSPLIB file")->required();
    solve_cmd->add_option("--algo", solve.algo, "elitist | mmas | beam | gbeam");
    CLI::Option* iters =
        solve_cmd->add_option("--iterations", solve.iterations, "iteration budget (default 5)");
    solve_cmd->add_option("--seconds", solve.seconds, "wall-clock budget")->excludes(iters);
    solve_cmd->add_option("--seed", solve.seed, "solver seed");
    solve_cmd->add_flag("--json", solve.json, "emit a JSON document instead of text");
    add_param_flags(solve_cmd, solve.params);

    BenchOptions bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run an experiment suite");
    bench_cmd->add_option("--protocol", bench.protocol, "duration | iterations | tsplib");
    bench_cmd->add_option("--sizes", bench.sizes, "random instance sizes")->delimiter(',');
    bench_cmd->add_option("--trials", bench.trials, "trials per size")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seconds", bench.seconds, "wall-clock budget per run");
    bench_cmd->add_option("--iterations", bench.iterations, "iteration budget per run");
    bench_cmd->add_option("--files", bench.files, "TSPLIB files (tsplib protocol)");
    bench_cmd->add_option("--algos", bench.algos, "subset of elitist,mmas,beam,gbeam")
        ->delimiter(',');
    bench_cmd->add_flag("--equiv-width", bench.equiv_width,
                        "add the gBeam configuration with the work-equivalent beam width");
    bench_cmd->add_flag("--no-equiv-width", bench.no_equiv_width,
                        "drop the work-equivalent gBeam configuration");
    bench_cmd->add_option("--out", bench.out, "write records to this file");
    bench_cmd->add_option("--format", bench.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    bench_cmd->add_flag("--parallel-trials", bench.parallel_trials,
                        "run trials concurrently (skews runtime columns)");
    bench_cmd->add_option("--seed-base", bench.seed_base, "first trial seed");
    bench_cmd->add_option("--ants", bench.ants, "colony size for beam/classic configs")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--beam-width", bench.beam_width, "beam width k for beam configs")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen);
        if (*solve_cmd) return cmd_solve(solve);
        return cmd_bench(bench);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
