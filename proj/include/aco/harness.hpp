#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "aco/pheromone.hpp"
#include "aco/solvers.hpp"

namespace aco::bench {

/// One algorithm entry of an experiment, e.g. gBeam with beam width 32 and a
/// single ant labeled "gBeam-32x1".
struct AlgoConfig {
    Algorithm algo = Algorithm::Beam;
    AcoParams params;
    std::string label;
};

AlgoConfig make_config(Algorithm algo, int beam_width, int n_ants);

struct ExperimentSpec {
    enum class Protocol { FixedDuration, FixedIterations, TsplibSuite };

    Protocol protocol = Protocol::FixedIterations;
    std::vector<AlgoConfig> algorithms;

    // random-instance source
    std::vector<int> sizes;
    int trials = 10;
    std::uint64_t seed_base = 1;

    // file source (tsplib protocol)
    std::vector<std::filesystem::path> files;

    // budget: wall-clock seconds or iteration count depending on protocol
    double seconds = 0.0;
    long iterations = 0;

    bool parallel_trials = false;
};

/// Flat result of one solver run inside a suite.
struct TrialRecord {
    std::string instance;  ///< "rand-<n>" or the file stem
    std::string algorithm; ///< solver label: elitist/mmas/beam/gbeam
    std::string config;    ///< e.g. "Beam-10x10"
    std::int64_t length = 0;
    double elapsed_s = 0.0;
    long iterations = 0;
    std::uint64_t partial_paths = 0;
    double kpp_s = 0.0; ///< thousand partial paths per second
    std::uint64_t seed = 0;
};

struct SummaryRow {
    std::string instance;
    std::string config;
    int trials = 0;
    double mean_length = 0.0;
    double stddev_length = 0.0;
    double mean_runtime = 0.0;
    double stddev_runtime = 0.0;
};

struct SuiteResult {
    std::vector<TrialRecord> records;
    std::size_t failed_trials = 0;
};

/// Every configuration runs against every random instance under a wall-clock
/// budget of spec.seconds (iterations are never cut short).
SuiteResult run_fixed_duration(const ExperimentSpec& spec);

/// Every configuration runs spec.iterations full iterations per instance.
SuiteResult run_fixed_iterations(const ExperimentSpec& spec);

/// TSPLIB files: Beam runs the configured budget, Elitist/MMAS then match
/// Beam's measured wall-clock time, and gBeam gets one second or one
/// iteration, whichever takes longer.
SuiteResult run_tsplib_suite(const ExperimentSpec& spec);

SuiteResult run_suite(const ExperimentSpec& spec);

/// Mean and sample standard deviation of length and runtime per
/// (instance, config) group, sorted by group key.
std::vector<SummaryRow> summarize(std::span<const TrialRecord> records);

/// Stable order for emission: by instance, then config, then seed.
void sort_records(std::vector<TrialRecord>& records);

/// CSV with the fixed header
/// instance,algorithm,config,length,elapsed_s,iterations,partial_paths,kpp_s,seed.
void emit_csv(std::span<const TrialRecord> records, std::ostream& out);

/// The same records as a JSON array of flat objects.
void emit_json(std::span<const TrialRecord> records, std::ostream& out);

/// Human-readable mean +/- stddev table.
std::string format_summary_table(std::span<const SummaryRow> rows);

/// Configurations for a protocol. An empty `labels` selects the protocol's
/// default set; for the fixed-iteration protocol that is the four-way
/// comparison Beam-kxA, gBeam-kx1, gBeam-keqx1, gBeam-kxA.
std::vector<AlgoConfig> make_configs(ExperimentSpec::Protocol protocol,
                                     std::span<const std::string> labels, int beam_width,
                                     int n_ants, bool include_equiv_width);

} // namespace aco::bench
