#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "fixtures.hpp"
#include "nwfs/harness/experiment.hpp"
#include "nwfs/harness/registry.hpp"
#include "nwfs/harness/run_record.hpp"
#include "nwfs/harness/taillard.hpp"

using namespace nwfs;
using namespace nwfs::harness;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("nwfs_test_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

RunRecord sample_record() {
    RunRecord r;
    r.instance = "ta023";
    r.n_jobs = 20;
    r.n_machines = 20;
    r.algorithm = "igsj";
    r.config = SolverSettings{}.to_json();
    r.seed = 18446744073709551557ULL;
    r.replication = 3;
    r.makespan = 3021;
    r.best_known = 3013;
    r.rpd = rpd(3021, 3013);
    r.permutation = {3, 1, 2, 0};
    r.trace = {{"pool", "", 20, 3013, 40000, 0}, {"init", "60", 7, 3021, 0, 0}, {"ig", "inf", 20, 3021, 2, 1000}};
    r.wall_ms = 40004;
    r.timestamp = "2026-01-02T03:04:05Z";
    return r;
}

}  // namespace

TEST(Rpd, Formula) {
    EXPECT_EQ(rpd(1000, 1000), 0.0);
    EXPECT_EQ(rpd(1030, 1000), 3.0);
    EXPECT_EQ(rpd(995, 1000), -0.5);
    EXPECT_THROW(rpd(10, 0), InputError);
    EXPECT_THROW(rpd(10, -4), InputError);
}

TEST(Registry, ParsesShippedFile) {
    const auto reg = BestKnownRegistry::load_default();
    EXPECT_EQ(reg.size(), 120u);
    EXPECT_EQ(reg.best("ta001"), 1486);
    EXPECT_EQ(reg.best("ta23"), 3013);
    EXPECT_EQ(reg.best("ta031"), 3160);
    EXPECT_FALSE(reg.best("ta999").has_value());
    const auto* e = reg.entry("ta031");
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->prior, 3161);
}

TEST(Registry, AllValuesPositive) {
    const auto reg = BestKnownRegistry::load_default();
    for (int k = 1; k <= 120; ++k) {
        const auto b = reg.best("ta" + std::to_string(k));
        ASSERT_TRUE(b) << k;
        EXPECT_GT(*b, 0);
    }
}

TEST(Registry, ParseErrors) {
    EXPECT_THROW(BestKnownRegistry::parse("name,best\nta001,abc\n"), ParseError);
    EXPECT_THROW(BestKnownRegistry::parse("name,best\nta001,-5\n"), ParseError);
    EXPECT_THROW(BestKnownRegistry::parse("name,best\nta001\n"), ParseError);
    EXPECT_THROW(BestKnownRegistry::load("/nonexistent/best.csv"), std::runtime_error);
    const auto reg = BestKnownRegistry::parse("# comment\nname,best\nmine,12\n");
    EXPECT_EQ(reg.best("mine"), 12);
}

TEST(RunRecord, JsonRoundTrip) {
    const RunRecord r = sample_record();
    const RunRecord back = parse_run_record(to_json_line(r));
    EXPECT_EQ(back, r);
    RunRecord failed;
    failed.instance = "x";
    failed.config = "{}";
    failed.error = "boom";
    EXPECT_EQ(parse_run_record(to_json_line(failed)), failed);
    EXPECT_THROW(parse_run_record("{\"instance\": 1}"), ParseError);
    EXPECT_THROW(parse_run_record("not json"), ParseError);
}

TEST(RunRecord, RpdDoubleSurvivesRoundTripBitExact) {
    RunRecord r = sample_record();
    r.rpd = 100.0 / 3.0;
    EXPECT_EQ(parse_run_record(to_json_line(r)).rpd, r.rpd);
}

TEST(Summary, MeanRpdIsArithmeticMean) {
    std::vector<RunRecord> recs;
    const std::vector<double> rpds{0.5, 0.0, -0.25, 1.75};
    for (std::size_t i = 0; i < rpds.size(); ++i) {
        RunRecord r = sample_record();
        r.rpd = rpds[i];
        r.wall_ms = static_cast<std::int64_t>(100 * (i + 1));
        recs.push_back(r);
    }
    RunRecord failed = sample_record();
    failed.error = "x";
    recs.push_back(failed);
    const auto s = summarize(recs);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].size, "20x20");
    EXPECT_EQ(s[0].runs, 5u);
    EXPECT_EQ(s[0].failures, 1u);
    ASSERT_TRUE(s[0].mean_rpd);
    EXPECT_DOUBLE_EQ(*s[0].mean_rpd, (0.5 + 0.0 - 0.25 + 1.75) / 4.0);
    EXPECT_DOUBLE_EQ(s[0].mean_ms, 250.0);
    ASSERT_EQ(s[0].phase_ms.size(), 3u);
    EXPECT_EQ(s[0].phase_ms[0].first, "pool");
    EXPECT_EQ(s[0].phase_ms[1].first, "init@60");
}

TEST(Experiment, ZeroReplicationsGiveEmptyResult) {
    ExperimentSpec spec;
    spec.instances = {"ta001"};
    spec.replications = 0;
    const auto r = run_experiment(spec, BestKnownRegistry{});
    EXPECT_TRUE(r.records.empty());
    EXPECT_TRUE(r.summary.empty());
}

TEST(Experiment, PersistsRecordsAndCapturesErrors) {
    const fs::path dir = scratch_dir("exp");
    ExperimentSpec spec;
    spec.settings = SolverSettings::defaults(Algorithm::ig);
    spec.settings.max_time_ms = 0;
    spec.settings.max_no_improve = 20;
    spec.instances = {"ta001", "no-such-instance", "ta002"};
    spec.replications = 2;
    spec.workers = 2;
    spec.out_dir = dir;
    const auto reg = BestKnownRegistry::load_default();
    const auto r = run_experiment(spec, reg);
    ASSERT_EQ(r.records.size(), 6u);
    EXPECT_FALSE(r.records[0].error.has_value());
    EXPECT_TRUE(r.records[2].error.has_value());
    EXPECT_TRUE(r.records[0].rpd.has_value());
    EXPECT_GE(*r.records[0].rpd, 0.0);

    std::ifstream jsonl(dir / "runs.jsonl");
    std::string line;
    std::size_t lines = 0;
    while (std::getline(jsonl, line)) {
        EXPECT_NO_THROW(parse_run_record(line));
        ++lines;
    }
    EXPECT_EQ(lines, 6u);
    std::ifstream csv(dir / "runs.csv");
    std::getline(csv, line);
    EXPECT_EQ(line, csv_header());
    EXPECT_TRUE(fs::exists(dir / "summary.csv"));

    // Appending a second batch keeps the earlier lines.
    run_experiment(spec, reg);
    std::ifstream again(dir / "runs.jsonl");
    lines = 0;
    while (std::getline(again, line))
        ++lines;
    EXPECT_EQ(lines, 12u);
    fs::remove_all(dir);
}

TEST(Experiment, SeedsIndependentOfWorkers) {
    ExperimentSpec spec;
    spec.settings = SolverSettings::defaults(Algorithm::ig);
    spec.settings.max_time_ms = 0;
    spec.settings.max_no_improve = 30;
    spec.instances = {"ta011"};
    spec.replications = 3;
    const auto a = run_experiment(spec, BestKnownRegistry{});
    spec.workers = 3;
    const auto b = run_experiment(spec, BestKnownRegistry{});
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(a.records[i].seed, b.records[i].seed);
        EXPECT_EQ(a.records[i].permutation, b.records[i].permutation);
    }
    EXPECT_NE(replication_seed(1, "ta011", 0), replication_seed(1, "ta011", 1));
    EXPECT_NE(replication_seed(1, "ta011", 0), replication_seed(1, "ta012", 0));
}

TEST(Experiment, ResolveInstanceSources) {
    const fs::path dir = scratch_dir("resolve");
    const fs::path file = dir / "tiny.txt";
    std::ofstream(file) << "2 2\n2 1\n3 2\n";
    const auto from_file = resolve_instance(file.string());
    EXPECT_EQ(from_file.name, "tiny");
    EXPECT_EQ(from_file.instance, Instance::from_rows({{2, 3}, {1, 2}}));
    const auto generated = resolve_instance("ta1");
    EXPECT_EQ(generated.name, "ta001");
    EXPECT_EQ(generated.instance.n_jobs(), 20u);
    EXPECT_THROW(resolve_instance("nothing-here"), InputError);
    fs::remove_all(dir);
}

TEST(Experiment, InstanceListExpansion) {
    EXPECT_EQ(expand_instance_list("ta031-ta033,ta1,file.txt"),
              (std::vector<std::string>{"ta031", "ta032", "ta033", "ta001", "file.txt"}));
    EXPECT_THROW(expand_instance_list("ta040-ta031"), InputError);
}

TEST(Experiment, PoolTextRoundTrip) {
    const Pool pool = fixtures::figure_pool();
    const Pool back = parse_pool(format_pool(pool));
    EXPECT_EQ(back.solutions(), pool.solutions());
    EXPECT_THROW(parse_pool("0 1 1\n"), ParseError);
    EXPECT_THROW(parse_pool("0 a\n"), ParseError);
    EXPECT_THROW(parse_pool("# empty\n"), InputError);
}

TEST(Experiment, SolveRecordsPhases) {
    const auto inst = resolve_instance("ta001");
    SolverSettings s = SolverSettings::defaults(Algorithm::igsj);
    s.max_time_ms = 0;
    s.max_no_improve = 20;
    s.pool_size = 4;
    s.phase_budget = PhaseBudget{0.0, 10.0};
    const auto reg = BestKnownRegistry::load_default();
    const RunRecord r = solve_instance(inst, s, 5, &reg);
    ASSERT_EQ(r.trace.size(), 5u);  // pool, init, three confidence levels
    EXPECT_EQ(r.trace[0].label, "pool");
    EXPECT_EQ(r.trace[1].label, "init");
    EXPECT_EQ(r.trace.back().sigma, "inf");
    EXPECT_EQ(r.best_known, 1486);
    EXPECT_DOUBLE_EQ(*r.rpd, rpd(r.makespan, 1486));
    EXPECT_EQ(r.makespan, r.trace.back().makespan);
    const RunRecord again = solve_instance(inst, s, 5, &reg);
    EXPECT_EQ(again.permutation, r.permutation);
}

TEST(Experiment, AlgorithmNames) {
    EXPECT_EQ(parse_algorithm("iigsj"), Algorithm::iigsj);
    EXPECT_THROW(parse_algorithm("sa"), InputError);
    const auto iter = SolverSettings::defaults(Algorithm::iigsj);
    EXPECT_EQ(iter.schedule.to_string(), "60,70,80,90,inf");
    EXPECT_DOUBLE_EQ(iter.phase_budget.time_factor, 1.0);
    EXPECT_DOUBLE_EQ(iter.phase_budget.noimprove_factor, 25.0);
}
