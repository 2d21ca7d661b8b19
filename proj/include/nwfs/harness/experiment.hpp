#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nwfs/delay_matrix.hpp"
#include "nwfs/harness/registry.hpp"
#include "nwfs/harness/run_record.hpp"
#include "nwfs/ig.hpp"
#include "nwfs/igsj.hpp"

namespace nwfs::harness {

enum class Algorithm { ig, igsj, iigsj };

std::string to_string(Algorithm algo);
/// Throws InputError on an unknown name.
Algorithm parse_algorithm(const std::string& name);

struct SolverSettings {
    Algorithm algorithm = Algorithm::igsj;
    std::size_t destruction_size = 4;
    double tau = 0.4;  ///< temperature factor
    Acceptance acceptance = Acceptance::incumbent;
    /// Plain IG and pool members run for n^2 * time_factor ms.
    double time_factor = 10.0;
    /// Replaces the n^2-derived time budget of plain IG and pool members.
    std::optional<std::int64_t> max_time_ms;
    /// Optional extra stop rule for plain IG and pool members.
    std::optional<std::int64_t> max_no_improve;
    /// Super-job phases.
    ConfidenceSchedule schedule = ConfidenceSchedule::coarse();
    PhaseBudget phase_budget;
    std::size_t pool_size = 10;
    /// Iterated variant.
    std::size_t iterations = 5;
    std::size_t pool_width = 20;
    std::size_t sample_size = 10;
    std::size_t threads = 1;

    /// igsj and ig keep the members above; iigsj switches to the fine schedule with
    /// phase budgets n_sj^2 ms and 25 * n_sj iterations.
    static SolverSettings defaults(Algorithm algo);

    std::string to_json() const;
};

struct NamedInstance {
    std::string name;
    Instance instance;
};

/// PATH if it names a readable file; otherwise a benchmark name looked up first as
/// <data_dir>/instances/taNNN.txt, then regenerated from the published seed.
/// Throws InputError when nothing matches.
NamedInstance resolve_instance(const std::string& spec);

/// The pool the super-job algorithms start from (pool_size for igsj, pool_width for iigsj).
Pool build_pool(const Instance& inst, const DelayMatrix& dm, const SolverSettings& s, std::uint64_t seed);

/// One run. `shared_pool` replaces the per-run pool when given (its build time is then not
/// charged to the run). The registry supplies the RPD baseline when it has the instance.
RunRecord solve_instance(const NamedInstance& inst, const SolverSettings& s, std::uint64_t seed,
                         const BestKnownRegistry* registry = nullptr, const Pool* shared_pool = nullptr);

struct ExperimentSpec {
    SolverSettings settings;
    std::vector<std::string> instances;
    std::size_t replications = 1;
    std::uint64_t base_seed = 1;
    /// Replications of an instance reuse one pool built from derive_seed(base_seed, instance).
    bool share_pool = false;
    /// Concurrent replications. Solver threads come from settings.threads.
    std::size_t workers = 1;
    /// Appends runs.jsonl and runs.csv here, and writes summary.csv. Empty disables persistence.
    std::filesystem::path out_dir;
};

struct SizeSummary {
    std::string size;  ///< "n x m"
    std::size_t runs = 0;
    std::size_t failures = 0;
    std::optional<double> mean_rpd;
    double mean_makespan = 0.0;
    double mean_ms = 0.0;
    /// Mean elapsed time per phase position, labelled by the phase's label and sigma.
    std::vector<std::pair<std::string, double>> phase_ms;
};

struct ExperimentResult {
    std::vector<RunRecord> records;
    std::vector<SizeSummary> summary;
};

/// Seed of replication `rep` on instance `name`; independent of worker count and order.
std::uint64_t replication_seed(std::uint64_t base_seed, const std::string& name, std::size_t rep);

/// Runs every (instance, replication). Solver failures are captured in RunRecord::error and
/// the batch continues; I/O failures throw std::runtime_error naming the file.
ExperimentResult run_experiment(const ExperimentSpec& spec, const BestKnownRegistry& registry,
                                const std::function<void(const RunRecord&)>& on_record = {});

std::vector<SizeSummary> summarize(const std::vector<RunRecord>& records);

/// "ta031-ta040,ta001,path/to/file.txt" -> individual instance specs.
std::vector<std::string> expand_instance_list(const std::string& list);

/// One permutation per line, ids separated by spaces; '#' starts a comment line.
std::string format_pool(const Pool& pool);
/// Throws ParseError on malformed lines and InputError on an invalid pool.
Pool parse_pool(std::string_view text, std::string source = "file");

/// Appends the record to <dir>/runs.jsonl and <dir>/runs.csv, creating them as needed.
void persist_record(const std::filesystem::path& dir, const RunRecord& r);

/// CSV row of a run: instance,size,algo,replication,makespan,rpd,total_ms,phases.
std::string csv_row(const RunRecord& r);
std::string csv_header();

}  // namespace nwfs::harness
