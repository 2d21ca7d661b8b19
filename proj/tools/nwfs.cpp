// nwfs: command-line front end for the no-wait flowshop solvers.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nwfs/delay_matrix.hpp"
#include "nwfs/enumerate.hpp"
#include "nwfs/harness/experiment.hpp"
#include "nwfs/harness/registry.hpp"
#include "nwfs/harness/taillard.hpp"
#include "nwfs/kernels.hpp"
#include "nwfs/superjobs.hpp"

namespace fs = std::filesystem;
using namespace nwfs;
using namespace nwfs::harness;

namespace {

struct Globals {
    std::string instance;
    std::string out;
    std::uint64_t seed = 1;
    std::size_t threads = 1;
    std::string kernels = "auto";
};

struct SolverFlags {
    std::string algo = "igsj";
    std::size_t destruction_size = 4;
    double tau = 0.4;
    std::string acceptance = "incumbent";
    std::optional<std::int64_t> max_time_ms;
    std::optional<std::int64_t> max_no_improve;
    std::optional<std::string> sigma;
    std::size_t pool_size = 10;
    double pool_time_factor = 10.0;
    std::size_t R = 20;
    std::size_t rho = 10;
    std::size_t iterations = 5;
    std::optional<double> time_factor;
    std::optional<double> noimprove_factor;
};

void add_ig_flags(CLI::App* cmd, SolverFlags& f) {
    cmd->add_option("--destruction-size", f.destruction_size, "Jobs removed per perturbation")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--temperature-factor", f.tau, "tau in T = tau * sum(p) / (n * m * 10)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--acceptance", f.acceptance, "Comparator of the acceptance test")
        ->check(CLI::IsMember({"incumbent", "best-ever"}));
    cmd->add_option("--max-time-ms", f.max_time_ms, "Time budget of plain IG and pool runs (default n^2 * pool time factor)");
    cmd->add_option("--max-no-improve", f.max_no_improve, "Extra no-improvement stop rule for plain IG and pool runs");
    cmd->add_option("--pool-time-factor", f.pool_time_factor, "Pool runs (and plain IG) last n^2 * factor ms")
        ->check(CLI::NonNegativeNumber);
}

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
    add_ig_flags(cmd, f);
    cmd->add_option("--algo", f.algo, "Algorithm")->check(CLI::IsMember({"ig", "igsj", "iigsj"}));
    cmd->add_option("--sigma", f.sigma, "Confidence schedule, e.g. 60,80,inf");
    cmd->add_option("--pool-size", f.pool_size, "Pool size for igsj")->check(CLI::PositiveNumber);
    cmd->add_option("--R", f.R, "Pool width of iigsj")->check(CLI::PositiveNumber);
    cmd->add_option("--rho", f.rho, "Solutions sampled per inner igsj run")->check(CLI::PositiveNumber);
    cmd->add_option("--iterations", f.iterations, "iigsj iterations")->check(CLI::PositiveNumber);
    cmd->add_option("--time-factor", f.time_factor, "Phase time budget n_sj^2 * factor ms (plain IG: n^2 * factor)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--noimprove-factor", f.noimprove_factor, "Phase no-improve budget factor * n_sj")
        ->check(CLI::NonNegativeNumber);
}

SolverSettings to_settings(const SolverFlags& f, const Globals& g) {
    SolverSettings s = SolverSettings::defaults(parse_algorithm(f.algo));
    s.destruction_size = f.destruction_size;
    s.tau = f.tau;
    s.acceptance = f.acceptance == "best-ever" ? Acceptance::best_ever : Acceptance::incumbent;
    s.time_factor = f.pool_time_factor;
    s.max_time_ms = f.max_time_ms;
    s.max_no_improve = f.max_no_improve;
    if (f.sigma)
        s.schedule = ConfidenceSchedule::parse(*f.sigma);
    s.pool_size = f.pool_size;
    s.pool_width = f.R;
    s.sample_size = f.rho;
    s.iterations = f.iterations;
    if (s.algorithm == Algorithm::ig) {
        if (f.time_factor)
            s.time_factor = *f.time_factor;
    } else {
        if (f.time_factor)
            s.phase_budget.time_factor = *f.time_factor;
        if (f.noimprove_factor)
            s.phase_budget.noimprove_factor = *f.noimprove_factor;
    }
    s.threads = g.threads;
    return s;
}

std::optional<BestKnownRegistry> try_registry() {
    try {
        return BestKnownRegistry::load_default();
    } catch (const std::exception& e) {
        std::cerr << "warning: " << e.what() << "; RPD disabled\n";
        return std::nullopt;
    }
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p);
    if (!in)
        throw std::runtime_error("cannot read " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const fs::path& p, const std::string& text) {
    if (p.has_parent_path())
        fs::create_directories(p.parent_path());
    std::ofstream out(p);
    if (!(out << text))
        throw std::runtime_error("cannot write " + p.string());
}

NamedInstance require_instance(const Globals& g) {
    if (g.instance.empty())
        throw CLI::RequiredError("--instance");
    return resolve_instance(g.instance);
}

int cmd_solve(const Globals& g, const SolverFlags& f) {
    const auto inst = require_instance(g);
    const auto settings = to_settings(f, g);
    const auto registry = try_registry();
    RunRecord rec = solve_instance(inst, settings, g.seed, registry ? &*registry : nullptr);
    for (const auto& p : rec.trace)
        std::cout << phase_json_line(rec, p) << '\n';
    std::cout << to_json_line(rec) << std::endl;
    if (!g.out.empty())
        persist_record(g.out, rec);
    return 0;
}

int cmd_pool(const Globals& g, const SolverFlags& f) {
    const auto inst = require_instance(g);
    SolverFlags pf = f;
    pf.algo = "igsj";
    const auto settings = to_settings(pf, g);
    const DelayMatrix dm(inst.instance);
    const Pool pool = build_pool(inst.instance, dm, settings, g.seed);
    for (const auto& p : pool.solutions())
        std::cerr << makespan(dm, p).makespan << ' ';
    std::cerr << '\n';
    const std::string text = format_pool(pool);
    if (g.out.empty()) {
        std::cout << text;
    } else {
        const fs::path path = fs::path(g.out) / ("pool_" + inst.name + ".txt");
        write_text(path, text);
        std::cerr << "wrote " << path.string() << '\n';
    }
    return 0;
}

int cmd_enumerate(const Globals& g, std::size_t keep, bool allow_large, bool full_scan) {
    const auto inst = require_instance(g);
    EnumerateOptions opts;
    opts.keep = keep;
    opts.allow_large = allow_large;
    opts.full_scan = full_scan;
    opts.threads = g.threads;
    const auto report = enumerate_local_optima(inst.instance, opts);
    const auto entry = [](const RankedSolution& r) {
        return nlohmann::json{{"makespan", r.makespan}, {"permutation", r.permutation.order()}};
    };
    nlohmann::json j = {{"instance", inst.name},
                        {"enumerated", report.enumerated},
                        {"classified", report.classified},
                        {"global_optimum", entry(report.global_optimum)}};
    j["local_optima"] = nlohmann::json::array();
    for (const auto& r : report.local_optima)
        j["local_optima"].push_back(entry(r));
    if (full_scan)
        j["local_optima_total"] = report.local_optima_total;
    std::cout << j.dump(2) << std::endl;
    return 0;
}

int cmd_analyze(const Globals& g, const std::string& pool_path, const std::string& sigmas, std::size_t top_pairs) {
    const Pool pool = parse_pool(read_text(pool_path), pool_path);
    std::optional<DelayMatrix> dm;
    if (!g.instance.empty()) {
        const auto inst = resolve_instance(g.instance);
        if (inst.instance.n_jobs() != pool.n_jobs())
            throw InputError("pool and instance disagree on the job count");
        dm.emplace(inst.instance);
        std::cout << "pool makespans:";
        for (const auto& p : pool.solutions())
            std::cout << ' ' << makespan(*dm, p).makespan;
        std::cout << '\n';
    }
    std::cout << "pool " << pool.size() << " solutions, " << pool.n_jobs() << " jobs\n";
    std::stringstream ss(sigmas);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const Confidence sigma = Confidence::parse(item);
        const SuperJobSet sjs = identify(pool, sigma);
        std::cout << "sigma=" << sigma.to_string() << " n_sj=" << sjs.size() << "  " << sjs.to_string() << '\n';
    }
    if (top_pairs > 0) {
        const auto counts = adjacency_frequency(pool);
        std::vector<std::pair<std::pair<JobId, JobId>, std::size_t>> ranked(counts.begin(), counts.end());
        std::stable_sort(ranked.begin(), ranked.end(),
                         [](const auto& a, const auto& b) { return a.second > b.second; });
        ranked.resize(std::min(top_pairs, ranked.size()));
        std::cout << "most frequent pairs:\n";
        for (const auto& [pair, count] : ranked)
            std::cout << "  [" << pair.first << ' ' << pair.second << "] " << count << '/' << pool.size() << '\n';
    }
    return 0;
}

int cmd_bench(const Globals& g, const SolverFlags& f, const std::string& instances, std::size_t replications,
              std::size_t workers, bool share_pool) {
    ExperimentSpec spec;
    spec.settings = to_settings(f, g);
    spec.instances = expand_instance_list(instances.empty() ? g.instance : instances);
    if (spec.instances.empty())
        throw CLI::RequiredError("--instances");
    spec.replications = replications;
    spec.base_seed = g.seed;
    spec.share_pool = share_pool;
    spec.workers = workers;
    spec.out_dir = g.out;
    const auto registry = try_registry().value_or(BestKnownRegistry{});
    std::cout << csv_header() << '\n';
    const auto result = run_experiment(spec, registry, [](const RunRecord& r) {
        std::cout << csv_row(r) << std::endl;
        if (r.error)
            std::cerr << r.instance << " replication " << r.replication << " failed: " << *r.error << '\n';
    });
    std::cout << "\nsize      runs  fail  mean_rpd   mean_ms\n";
    for (const auto& s : result.summary) {
        std::cout << std::left << std::setw(10) << s.size << std::right << std::setw(4) << s.runs << std::setw(6)
                  << s.failures << std::setw(10) << std::fixed << std::setprecision(3)
                  << (s.mean_rpd ? *s.mean_rpd : std::nan("")) << std::setw(10) << std::setprecision(0)
                  << s.mean_ms << '\n';
        for (const auto& [phase, ms] : s.phase_ms)
            std::cout << "    " << phase << ' ' << std::setprecision(1) << ms << " ms\n";
    }
    return 0;
}

int cmd_gen(const Globals& g, std::size_t n, std::size_t m) {
    TaillardHeader header;
    Instance inst;
    std::string name;
    if (!g.instance.empty()) {
        const auto entry = catalog_entry(g.instance);
        if (!entry)
            throw InputError("unknown benchmark name " + g.instance);
        header.n_jobs = entry->n_jobs;
        header.n_machines = entry->n_machines;
        header.seed = entry->seed;
        inst = generate_instance(entry->n_jobs, entry->n_machines, entry->seed);
        name = entry->name;
    } else {
        if (n == 0 || m == 0)
            throw CLI::RequiredError("--n and --m (or --instance)");
        header.n_jobs = n;
        header.n_machines = m;
        header.seed = static_cast<std::int64_t>(g.seed);
        inst = generate_instance(n, m, static_cast<std::int64_t>(g.seed));
        name = "gen_" + std::to_string(n) + "x" + std::to_string(m) + "_" + std::to_string(g.seed);
    }
    const std::string text = format_taillard(inst, header);
    if (g.out.empty()) {
        std::cout << text;
    } else {
        const fs::path path = fs::path(g.out) / (name + ".txt");
        write_text(path, text);
        std::cerr << "wrote " << path.string() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"No-wait flowshop makespan solvers: IG, IG with super-jobs, iterated IG with super-jobs"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--instance", g.instance, "Instance file or benchmark name (ta001..ta120)");
    app.add_option("--out", g.out, "Output directory");
    app.add_option("--seed", g.seed, "Base random seed");
    app.add_option("--threads", g.threads, "Worker threads for pools and iigsj")->check(CLI::PositiveNumber);
    app.add_option("--kernels", g.kernels, "Evaluation kernels")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    SolverFlags solve_flags;
    auto* solve = app.add_subcommand("solve", "Run one solver on one instance; JSON lines per phase");
    add_solver_flags(solve, solve_flags);

    SolverFlags pool_flags;
    auto* pool = app.add_subcommand("pool", "Build a pool of independent IG solutions");
    add_ig_flags(pool, pool_flags);
    pool->add_option("--pool-size", pool_flags.pool_size, "Number of IG runs")->check(CLI::PositiveNumber);

    std::size_t keep = 10;
    bool allow_large = false;
    bool full_scan = false;
    auto* enumerate = app.add_subcommand("enumerate", "Exhaustive global/local optima report (small n)");
    enumerate->add_option("--keep", keep, "Best local optima to report");
    enumerate->add_flag("--allow-large", allow_large, "Permit up to 12 jobs (hours of compute)");
    enumerate->add_flag("--full-scan", full_scan, "Classify every permutation and count all local optima");

    std::string pool_path;
    std::string sigmas = "60,70,80,90,100,inf";
    std::size_t top_pairs = 10;
    auto* analyze = app.add_subcommand("analyze", "Super-jobs of a saved pool at several confidence levels");
    analyze->add_option("--pool", pool_path, "Pool file")->required()->check(CLI::ExistingFile);
    analyze->add_option("--sigma", sigmas, "Confidence levels to report");
    analyze->add_option("--pairs", top_pairs, "Most frequent adjacent pairs to list");

    SolverFlags bench_flags;
    std::string instances;
    std::size_t replications = 1;
    std::size_t workers = 1;
    bool share_pool = false;
    auto* bench = app.add_subcommand("bench", "Replication batch with CSV/JSONL records and a size summary");
    add_solver_flags(bench, bench_flags);
    bench->add_option("--instances", instances, "List such as ta031-ta040,ta023");
    bench->add_option("--replications", replications, "Runs per instance");
    bench->add_option("--workers", workers, "Concurrent replications")->check(CLI::PositiveNumber);
    bench->add_flag("--share-pool", share_pool, "One pool per instance for all its replications");

    std::size_t gen_n = 0;
    std::size_t gen_m = 0;
    auto* gen = app.add_subcommand("gen", "Generate a benchmark-format instance");
    gen->add_option("--n", gen_n, "Jobs");
    gen->add_option("--m", gen_m, "Machines");

    CLI11_PARSE(app, argc, argv);

    try {
        if (g.kernels != "auto")
            kernels::set_backend(*kernels::parse_backend(g.kernels));
        if (*solve)
            return cmd_solve(g, solve_flags);
        if (*pool)
            return cmd_pool(g, pool_flags);
        if (*enumerate)
            return cmd_enumerate(g, keep, allow_large, full_scan);
        if (*analyze)
            return cmd_analyze(g, pool_path, sigmas, top_pairs);
        if (*bench)
            return cmd_bench(g, bench_flags, instances, replications, workers, share_pool);
        if (*gen)
            return cmd_gen(g, gen_n, gen_m);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
