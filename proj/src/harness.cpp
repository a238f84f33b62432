#include "aco/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "aco/tsplib.hpp"

namespace aco::bench {
namespace {

constexpr double kGbeamBudgetSeconds = 1.0;

double kpp_per_second(std::uint64_t partial_paths, double elapsed_s) {
    return static_cast<double>(partial_paths) / std::max(elapsed_s, 1e-12) / 1000.0;
}

TrialRecord to_record(const std::string& instance_id, const AlgoConfig& config,
                      const SolverResult& result) {
    TrialRecord rec;
    rec.instance = instance_id;
    rec.algorithm = result.algorithm;
    rec.config = config.label;
    rec.length = result.best_tour.length;
    rec.elapsed_s = result.elapsed_s;
    rec.iterations = result.iterations;
    rec.partial_paths = result.partial_paths_considered;
    rec.kpp_s = kpp_per_second(result.partial_paths_considered, result.elapsed_s);
    rec.seed = result.seed;
    return rec;
}

SolverResult dispatch(const TspInstance& inst, const AlgoConfig& config, const StopPredicate& stop,
                      std::uint64_t seed) {
    switch (config.algo) {
    case Algorithm::Elitist: return run_elitist(inst, config.params, stop, seed);
    case Algorithm::Mmas: return run_mmas(inst, config.params, stop, seed);
    case Algorithm::Beam: return run_beam_aco(inst, config.params, stop, seed);
    case Algorithm::GBeam: return run_gbeam_aco(inst, config.params, stop, seed);
    }
    throw std::logic_error("unreachable");
}

/// Random-instance protocols share the trial structure; only the stop
/// predicate differs.
SuiteResult run_random_protocol(const ExperimentSpec& spec, const StopPredicate& stop) {
    if (spec.algorithms.empty()) {
        throw std::invalid_argument("experiment has no algorithms");
    }
    if (spec.sizes.empty()) {
        throw std::invalid_argument("experiment has no instance sizes");
    }
    if (spec.trials < 1) {
        throw std::invalid_argument("experiment needs at least one trial");
    }

    struct Task {
        int size;
        int trial;
    };
    std::vector<Task> tasks;
    for (int size : spec.sizes) {
        for (int trial = 0; trial < spec.trials; ++trial) {
            tasks.push_back({size, trial});
        }
    }

    std::vector<std::vector<TrialRecord>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> failures{0};
    std::mutex log_mutex;

    const auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            const Task& task = tasks[i];
            const std::uint64_t seed = spec.seed_base + static_cast<std::uint64_t>(task.trial);
            try {
                const TspInstance inst = random_instance(task.size, seed);
                const std::string id = "rand-" + std::to_string(task.size);
                for (const AlgoConfig& config : spec.algorithms) {
                    slots[i].push_back(to_record(id, config, dispatch(inst, config, stop, seed)));
                }
            } catch (const std::exception& e) {
                failures.fetch_add(1);
                std::lock_guard<std::mutex> lock(log_mutex);
                std::cerr << "trial failed (n=" << task.size << ", trial " << task.trial
                          << "): " << e.what() << "\n";
            }
        }
    };

    if (spec.parallel_trials && tasks.size() > 1) {
        const unsigned n_threads =
            std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                               static_cast<unsigned>(tasks.size()));
        std::vector<std::thread> threads;
        threads.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            threads.emplace_back(worker);
        }
        for (std::thread& t : threads) {
            t.join();
        }
    } else {
        worker();
    }

    SuiteResult result;
    result.failed_trials = failures.load();
    for (std::vector<TrialRecord>& slot : slots) {
        for (TrialRecord& rec : slot) {
            result.records.push_back(std::move(rec));
        }
    }
    sort_records(result.records);
    return result;
}

} // namespace

AlgoConfig make_config(Algorithm algo, int beam_width, int n_ants) {
    AlgoConfig config;
    config.algo = algo;
    config.params.beam_width = beam_width;
    config.params.n_ants = n_ants;
    switch (algo) {
    case Algorithm::Elitist:
        config.label = "Elitist";
        break;
    case Algorithm::Mmas:
        config.label = "MMAS";
        break;
    case Algorithm::Beam:
        config.label = "Beam-" + std::to_string(beam_width) + "x" + std::to_string(n_ants);
        break;
    case Algorithm::GBeam:
        config.label = "gBeam-" + std::to_string(beam_width) + "x" + std::to_string(n_ants);
        config.params.gbeam_keep_redundant_ants = n_ants > 1;
        break;
    }
    return config;
}

SuiteResult run_fixed_duration(const ExperimentSpec& spec) {
    if (!(spec.seconds > 0.0)) {
        throw std::invalid_argument("fixed-duration protocol needs a positive --seconds budget");
    }
    return run_random_protocol(spec, StopPredicate::wall_clock(spec.seconds));
}

SuiteResult run_fixed_iterations(const ExperimentSpec& spec) {
    if (spec.iterations < 1) {
        throw std::invalid_argument("fixed-iteration protocol needs --iterations >= 1");
    }
    return run_random_protocol(spec, StopPredicate::max_iterations(spec.iterations));
}

SuiteResult run_tsplib_suite(const ExperimentSpec& spec) {
    if (spec.algorithms.empty()) {
        throw std::invalid_argument("experiment has no algorithms");
    }
    if (spec.files.empty()) {
        throw std::invalid_argument("tsplib protocol needs instance files");
    }

    // Beam's budget; the classic solvers are then given Beam's measured
    // wall-clock time so all of them do comparably timed runs.
    const StopPredicate beam_stop = spec.seconds > 0.0
                                        ? StopPredicate::wall_clock(spec.seconds)
                                        : StopPredicate::max_iterations(
                                              spec.iterations > 0 ? spec.iterations : 1);
    const StopPredicate gbeam_stop =
        StopPredicate::all_of({StopPredicate::wall_clock(kGbeamBudgetSeconds),
                               StopPredicate::max_iterations(1)});

    SuiteResult result;
    std::uint64_t file_index = 0;
    for (const std::filesystem::path& path : spec.files) {
        const std::uint64_t seed = spec.seed_base + file_index++;
        TspInstance inst;
        try {
            inst = tsplib::load_file(path);
        } catch (const std::exception& e) {
            ++result.failed_trials;
            std::cerr << "skipping " << path.string() << ": " << e.what() << "\n";
            continue;
        }
        const std::string id = path.stem().string();

        double beam_elapsed = 0.0;
        std::vector<const AlgoConfig*> classics;
        for (const AlgoConfig& config : spec.algorithms) {
            try {
                switch (config.algo) {
                case Algorithm::Beam: {
                    const SolverResult res = dispatch(inst, config, beam_stop, seed);
                    beam_elapsed = res.elapsed_s;
                    result.records.push_back(to_record(id, config, res));
                    break;
                }
                case Algorithm::GBeam:
                    result.records.push_back(
                        to_record(id, config, dispatch(inst, config, gbeam_stop, seed)));
                    break;
                default:
                    classics.push_back(&config); // needs Beam's elapsed time first
                    break;
                }
            } catch (const std::exception& e) {
                ++result.failed_trials;
                std::cerr << id << "/" << config.label << " failed: " << e.what() << "\n";
            }
        }
        for (const AlgoConfig* config : classics) {
            try {
                const StopPredicate stop = beam_elapsed > 0.0
                                               ? StopPredicate::wall_clock(beam_elapsed)
                                               : beam_stop;
                result.records.push_back(to_record(id, *config, dispatch(inst, *config, stop, seed)));
            } catch (const std::exception& e) {
                ++result.failed_trials;
                std::cerr << id << "/" << config->label << " failed: " << e.what() << "\n";
            }
        }
    }
    sort_records(result.records);
    return result;
}

SuiteResult run_suite(const ExperimentSpec& spec) {
    switch (spec.protocol) {
    case ExperimentSpec::Protocol::FixedDuration: return run_fixed_duration(spec);
    case ExperimentSpec::Protocol::FixedIterations: return run_fixed_iterations(spec);
    case ExperimentSpec::Protocol::TsplibSuite: return run_tsplib_suite(spec);
    }
    throw std::logic_error("unreachable");
}

std::vector<SummaryRow> summarize(std::span<const TrialRecord> records) {
    if (records.empty()) {
        throw std::invalid_argument("summarize: no records");
    }
    std::vector<TrialRecord> sorted(records.begin(), records.end());
    sort_records(sorted);

    std::vector<SummaryRow> rows;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j].instance == sorted[i].instance &&
               sorted[j].config == sorted[i].config) {
            ++j;
        }
        const std::size_t count = j - i;
        double sum_len = 0.0;
        double sum_rt = 0.0;
        for (std::size_t r = i; r < j; ++r) {
            sum_len += static_cast<double>(sorted[r].length);
            sum_rt += sorted[r].elapsed_s;
        }
        const double mean_len = sum_len / static_cast<double>(count);
        const double mean_rt = sum_rt / static_cast<double>(count);
        double ss_len = 0.0;
        double ss_rt = 0.0;
        for (std::size_t r = i; r < j; ++r) {
            const double dl = static_cast<double>(sorted[r].length) - mean_len;
            const double dr = sorted[r].elapsed_s - mean_rt;
            ss_len += dl * dl;
            ss_rt += dr * dr;
        }
        SummaryRow row;
        row.instance = sorted[i].instance;
        row.config = sorted[i].config;
        row.trials = static_cast<int>(count);
        row.mean_length = mean_len;
        row.mean_runtime = mean_rt;
        if (count > 1) {
            row.stddev_length = std::sqrt(ss_len / static_cast<double>(count - 1));
            row.stddev_runtime = std::sqrt(ss_rt / static_cast<double>(count - 1));
        }
        rows.push_back(std::move(row));
        i = j;
    }
    return rows;
}

void sort_records(std::vector<TrialRecord>& records) {
    std::sort(records.begin(), records.end(), [](const TrialRecord& a, const TrialRecord& b) {
        if (a.instance != b.instance) return a.instance < b.instance;
        if (a.config != b.config) return a.config < b.config;
        return a.seed < b.seed;
    });
}

void emit_csv(std::span<const TrialRecord> records, std::ostream& out) {
    out << "instance,algorithm,config,length,elapsed_s,iterations,partial_paths,kpp_s,seed\n";
    char buf[64];
    for (const TrialRecord& rec : records) {
        out << rec.instance << ',' << rec.algorithm << ',' << rec.config << ',' << rec.length
            << ',';
        std::snprintf(buf, sizeof(buf), "%.6f", rec.elapsed_s);
        out << buf << ',' << rec.iterations << ',' << rec.partial_paths << ',';
        std::snprintf(buf, sizeof(buf), "%.3f", rec.kpp_s);
        out << buf << ',' << rec.seed << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed writing CSV output");
    }
}

void emit_json(std::span<const TrialRecord> records, std::ostream& out) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TrialRecord& rec : records) {
        arr.push_back({{"instance", rec.instance},
                       {"algorithm", rec.algorithm},
                       {"config", rec.config},
                       {"length", rec.length},
                       {"elapsed_s", rec.elapsed_s},
                       {"iterations", rec.iterations},
                       {"partial_paths", rec.partial_paths},
                       {"kpp_s", rec.kpp_s},
                       {"seed", rec.seed}});
    }
    out << arr.dump(2) << '\n';
    if (!out) {
        throw std::runtime_error("failed writing JSON output");
    }
}

std::string format_summary_table(std::span<const SummaryRow> rows) {
    std::ostringstream out;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-14s %-14s %7s %12s %10s %12s %10s\n", "instance", "config",
                  "trials", "mean_len", "sd_len", "mean_s", "sd_s");
    out << buf;
    for (const SummaryRow& row : rows) {
        std::snprintf(buf, sizeof(buf), "%-14s %-14s %7d %12.1f %10.1f %12.3f %10.3f\n",
                      row.instance.c_str(), row.config.c_str(), row.trials, row.mean_length,
                      row.stddev_length, row.mean_runtime, row.stddev_runtime);
        out << buf;
    }
    return out.str();
}

std::vector<AlgoConfig> make_configs(ExperimentSpec::Protocol protocol,
                                     std::span<const std::string> labels, int beam_width,
                                     int n_ants, bool include_equiv_width) {
    const int k_equiv = equivalent_beam_width(n_ants, beam_width);
    std::vector<AlgoConfig> configs;

    if (labels.empty()) {
        if (protocol == ExperimentSpec::Protocol::FixedIterations) {
            configs.push_back(make_config(Algorithm::Beam, beam_width, n_ants));
            configs.push_back(make_config(Algorithm::GBeam, beam_width, 1));
            if (include_equiv_width) {
                configs.push_back(make_config(Algorithm::GBeam, k_equiv, 1));
            }
            configs.push_back(make_config(Algorithm::GBeam, beam_width, n_ants));
        } else {
            configs.push_back(make_config(Algorithm::Elitist, beam_width, n_ants));
            configs.push_back(make_config(Algorithm::Mmas, beam_width, n_ants));
            configs.push_back(make_config(Algorithm::Beam, beam_width, n_ants));
            configs.push_back(make_config(Algorithm::GBeam, beam_width, 1));
        }
        return configs;
    }

    for (const std::string& label : labels) {
        const Algorithm algo = algorithm_from_label(label);
        if (algo == Algorithm::GBeam) {
            configs.push_back(make_config(algo, beam_width, 1));
            if (include_equiv_width) {
                configs.push_back(make_config(algo, k_equiv, 1));
            }
        } else {
            configs.push_back(make_config(algo, beam_width, n_ants));
        }
    }
    return configs;
}

} // namespace aco::bench
