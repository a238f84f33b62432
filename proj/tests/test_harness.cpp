#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "aco/harness.hpp"
#include "aco/tsplib.hpp"
#include "test_util.hpp"

using namespace aco;
using namespace aco::bench;

namespace {

TrialRecord record(const std::string& instance, const std::string& config, std::int64_t length,
                   double elapsed, std::uint64_t seed) {
    TrialRecord rec;
    rec.instance = instance;
    rec.algorithm = "beam";
    rec.config = config;
    rec.length = length;
    rec.elapsed_s = elapsed;
    rec.iterations = 5;
    rec.partial_paths = 1000;
    rec.kpp_s = 1000.0 / std::max(elapsed, 1e-12) / 1000.0;
    rec.seed = seed;
    return rec;
}

ExperimentSpec tiny_iteration_spec() {
    ExperimentSpec spec;
    spec.protocol = ExperimentSpec::Protocol::FixedIterations;
    spec.algorithms = {make_config(Algorithm::Beam, 4, 3), make_config(Algorithm::GBeam, 4, 1)};
    spec.sizes = {10, 14};
    spec.trials = 2;
    spec.iterations = 2;
    spec.seed_base = 5;
    return spec;
}

} // namespace

TEST_CASE("summarize computes mean and sample stddev per group") {
    std::vector<TrialRecord> records{record("rand-50", "Beam-10x10", 10, 1.0, 1),
                                     record("rand-50", "Beam-10x10", 20, 3.0, 2),
                                     record("rand-50", "gBeam-10x1", 7, 0.1, 1)};
    const std::vector<SummaryRow> rows = summarize(records);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].config == "Beam-10x10");
    CHECK(rows[0].trials == 2);
    CHECK(rows[0].mean_length == doctest::Approx(15.0));
    CHECK(rows[0].stddev_length == doctest::Approx(7.0710678118654755));
    CHECK(rows[0].mean_runtime == doctest::Approx(2.0));
    CHECK(rows[1].config == "gBeam-10x1");
    CHECK(rows[1].trials == 1);
    CHECK(rows[1].stddev_length == 0.0);
    CHECK_THROWS_AS(summarize(std::vector<TrialRecord>{}), std::invalid_argument);
}

TEST_CASE("summarize groups by instance and config") {
    std::vector<TrialRecord> records{record("rand-50", "Beam-10x10", 10, 1.0, 1),
                                     record("rand-250", "Beam-10x10", 30, 1.0, 1),
                                     record("rand-50", "Beam-10x10", 12, 1.0, 2)};
    const std::vector<SummaryRow> rows = summarize(records);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].instance == "rand-250");
    CHECK(rows[1].instance == "rand-50");
    CHECK(rows[1].trials == 2);
}

TEST_CASE("csv emission has a stable header and constant field counts") {
    std::ostringstream empty;
    emit_csv(std::vector<TrialRecord>{}, empty);
    CHECK(empty.str() ==
          "instance,algorithm,config,length,elapsed_s,iterations,partial_paths,kpp_s,seed\n");

    std::vector<TrialRecord> records{record("rand-50", "Beam-10x10", 10, 1.0, 1),
                                     record("a280", "gBeam-10x1", 3399, 1.2, 7)};
    std::ostringstream out;
    emit_csv(records, out);
    std::istringstream lines(out.str());
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        CHECK(std::count(line.begin(), line.end(), ',') == 8);
        ++rows;
    }
    CHECK(rows == 3);
}

TEST_CASE("json emission round-trips records exactly") {
    std::vector<TrialRecord> records{record("rand-50", "Beam-10x10", 1449, 0.69, 1),
                                     record("rand-50", "gBeam-10x1", 1513, 0.07, 1)};
    std::ostringstream out;
    emit_json(records, out);
    const nlohmann::json doc = nlohmann::json::parse(out.str());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(doc[i]["instance"] == records[i].instance);
        CHECK(doc[i]["algorithm"] == records[i].algorithm);
        CHECK(doc[i]["config"] == records[i].config);
        CHECK(doc[i]["length"].get<std::int64_t>() == records[i].length);
        CHECK(doc[i]["elapsed_s"].get<double>() == records[i].elapsed_s);
        CHECK(doc[i]["iterations"].get<long>() == records[i].iterations);
        CHECK(doc[i]["partial_paths"].get<std::uint64_t>() == records[i].partial_paths);
        CHECK(doc[i]["kpp_s"].get<double>() == records[i].kpp_s);
        CHECK(doc[i]["seed"].get<std::uint64_t>() == records[i].seed);
    }
}

TEST_CASE("fixed-iteration suite is deterministic apart from timing") {
    const ExperimentSpec spec = tiny_iteration_spec();
    const SuiteResult a = run_fixed_iterations(spec);
    const SuiteResult b = run_fixed_iterations(spec);
    REQUIRE(a.records.size() == b.records.size());
    REQUIRE(a.records.size() == 8); // 2 sizes x 2 trials x 2 configs
    CHECK(a.failed_trials == 0);
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].instance == b.records[i].instance);
        CHECK(a.records[i].algorithm == b.records[i].algorithm);
        CHECK(a.records[i].config == b.records[i].config);
        CHECK(a.records[i].length == b.records[i].length);
        CHECK(a.records[i].iterations == b.records[i].iterations);
        CHECK(a.records[i].partial_paths == b.records[i].partial_paths);
        CHECK(a.records[i].seed == b.records[i].seed);
        // elapsed_s and kpp_s are the timing columns and may differ
    }
}

TEST_CASE("derived throughput matches the counter and the clock") {
    const SuiteResult suite = run_fixed_iterations(tiny_iteration_spec());
    for (const TrialRecord& rec : suite.records) {
        const double expected =
            static_cast<double>(rec.partial_paths) / std::max(rec.elapsed_s, 1e-12) / 1000.0;
        CHECK(rec.kpp_s == doctest::Approx(expected).epsilon(1e-9));
        CHECK(rec.iterations == 2);
    }
}

TEST_CASE("parallel trials produce the same records as sequential runs") {
    ExperimentSpec spec = tiny_iteration_spec();
    const SuiteResult sequential = run_fixed_iterations(spec);
    spec.parallel_trials = true;
    const SuiteResult parallel = run_fixed_iterations(spec);
    REQUIRE(parallel.records.size() == sequential.records.size());
    for (std::size_t i = 0; i < parallel.records.size(); ++i) {
        CHECK(parallel.records[i].instance == sequential.records[i].instance);
        CHECK(parallel.records[i].config == sequential.records[i].config);
        CHECK(parallel.records[i].length == sequential.records[i].length);
        CHECK(parallel.records[i].seed == sequential.records[i].seed);
    }
}

TEST_CASE("fixed-duration suite always completes at least one iteration") {
    ExperimentSpec spec;
    spec.protocol = ExperimentSpec::Protocol::FixedDuration;
    spec.algorithms = {make_config(Algorithm::Elitist, 4, 3), make_config(Algorithm::Beam, 4, 3)};
    spec.sizes = {12};
    spec.trials = 2;
    spec.seconds = 1e-6; // far below one iteration: the budget is exceeded
    const SuiteResult suite = run_fixed_duration(spec);
    REQUIRE(suite.records.size() == 4);
    for (const TrialRecord& rec : suite.records) {
        CHECK(rec.iterations >= 1);
        CHECK(rec.elapsed_s >= spec.seconds);
    }
}

TEST_CASE("suite validation rejects empty setups") {
    ExperimentSpec spec;
    spec.protocol = ExperimentSpec::Protocol::FixedDuration;
    spec.sizes = {10};
    spec.seconds = 0.01;
    CHECK_THROWS_AS(run_fixed_duration(spec), std::invalid_argument); // no algorithms
    spec.algorithms = {make_config(Algorithm::Beam, 4, 3)};
    spec.seconds = 0.0;
    CHECK_THROWS_AS(run_fixed_duration(spec), std::invalid_argument); // no budget
    spec.protocol = ExperimentSpec::Protocol::FixedIterations;
    spec.iterations = 0;
    CHECK_THROWS_AS(run_fixed_iterations(spec), std::invalid_argument);
}

TEST_CASE("gbeam path lengths are identical with one or many ants") {
    ExperimentSpec spec;
    spec.protocol = ExperimentSpec::Protocol::FixedIterations;
    spec.algorithms = {make_config(Algorithm::GBeam, 5, 1), make_config(Algorithm::GBeam, 5, 6)};
    spec.sizes = {15};
    spec.trials = 3;
    spec.iterations = 3;
    const SuiteResult suite = run_fixed_iterations(spec);
    const std::vector<SummaryRow> rows = summarize(suite.records);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].mean_length == rows[1].mean_length);
    CHECK(rows[0].stddev_length == rows[1].stddev_length);
}

TEST_CASE("tsplib suite runs every algorithm and skips broken files") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "aco_harness_test";
    fs::create_directories(dir);
    const fs::path good = dir / "small.tsp";
    tsplib::save_file(random_instance(16, 3), good);
    const fs::path bad = dir / "broken.tsp";
    std::ofstream(bad) << "NAME : broken\nTYPE : TSP\nDIMENSION : 4\n";

    ExperimentSpec spec;
    spec.protocol = ExperimentSpec::Protocol::TsplibSuite;
    spec.algorithms = make_configs(spec.protocol, {}, 4, 3, false);
    spec.files = {good, bad};
    spec.iterations = 1;
    const SuiteResult suite = run_tsplib_suite(spec);
    CHECK(suite.failed_trials == 1);
    REQUIRE(suite.records.size() == 4); // four configs on the good file
    for (const TrialRecord& rec : suite.records) {
        CHECK(rec.instance == "small");
        CHECK(rec.kpp_s > 0.0);
        if (rec.algorithm == "gbeam") {
            // one second or one iteration, whichever takes longer
            CHECK(rec.elapsed_s >= 1.0);
        }
    }
    fs::remove_all(dir);
}

TEST_CASE("make_configs covers the defaults and explicit subsets") {
    const std::vector<AlgoConfig> table1 =
        make_configs(ExperimentSpec::Protocol::FixedIterations, {}, 10, 10, true);
    REQUIRE(table1.size() == 4);
    CHECK(table1[0].label == "Beam-10x10");
    CHECK(table1[1].label == "gBeam-10x1");
    CHECK(table1[2].label == "gBeam-32x1"); // equivalent width of 10 ants x k 10
    CHECK(table1[3].label == "gBeam-10x10");
    CHECK(table1[3].params.gbeam_keep_redundant_ants);

    const std::vector<AlgoConfig> suite =
        make_configs(ExperimentSpec::Protocol::TsplibSuite, {}, 10, 10, false);
    REQUIRE(suite.size() == 4);
    CHECK(suite[0].label == "Elitist");
    CHECK(suite[1].label == "MMAS");

    const std::vector<std::string> labels{"beam", "gbeam"};
    const std::vector<AlgoConfig> subset =
        make_configs(ExperimentSpec::Protocol::FixedIterations, labels, 10, 10, false);
    REQUIRE(subset.size() == 2);
    CHECK(subset[0].label == "Beam-10x10");
    CHECK(subset[1].label == "gBeam-10x1");
}
