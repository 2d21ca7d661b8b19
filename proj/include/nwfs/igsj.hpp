#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nwfs/delay_matrix.hpp"
#include "nwfs/ig.hpp"
#include "nwfs/superjobs.hpp"

namespace nwfs {

/// Strictly increasing confidence levels; only the last may be infinite.
class ConfidenceSchedule {
public:
    ConfidenceSchedule() = default;
    explicit ConfidenceSchedule(std::vector<Confidence> levels);

    /// {60, 80, inf}
    static ConfidenceSchedule coarse();
    /// {60, 70, 80, 90, inf}
    static ConfidenceSchedule fine();
    /// Comma separated, e.g. "60,80,inf".
    static ConfidenceSchedule parse(const std::string& text);

    const std::vector<Confidence>& levels() const noexcept { return levels_; }
    std::size_t size() const noexcept { return levels_.size(); }
    std::string to_string() const;

private:
    std::vector<Confidence> levels_;
};

/// Budgets derived from a phase's meta-job count n_sj:
/// time = time_factor * n_sj^2 ms, no-improve = noimprove_factor * n_sj iterations.
/// A factor of 0 disables that rule; at least one must be positive.
struct PhaseBudget {
    double time_factor = 10.0;
    double noimprove_factor = 50.0;

    IgConfig apply(IgConfig base, std::size_t n_sj) const;
};

struct IgsjConfig {
    ConfidenceSchedule schedule = ConfidenceSchedule::coarse();
    /// Destruction size, temperature and acceptance; stop rules come from `budget`.
    IgConfig ig;
    PhaseBudget budget;
    std::uint64_t seed = 1;
};

struct PhaseRecord {
    std::string label;                ///< "init" or "ig"
    Confidence sigma = Confidence::infinite();
    std::size_t n_sj = 0;             ///< meta-job count of the phase
    Time makespan = 0;                ///< incumbent after the phase
    std::int64_t elapsed_ms = 0;
    std::int64_t iterations = 0;      ///< IG iterations (0 for init)
    std::string blocks;               ///< bracket notation of the phase's super-jobs
};

struct IgsjResult {
    Permutation best;
    Time best_makespan = 0;
    std::vector<PhaseRecord> trace;
    std::int64_t elapsed_ms = 0;
};

struct PoolBudget {
    std::int64_t time_ms = 0;                   ///< per run; 0 disables
    std::optional<std::int64_t> max_no_improve;  ///< per run
};

/// `count` independent IG runs, each from a randomised best-insertion construction.
/// Run i is seeded from derive_seed(seed, i), so results do not depend on `threads`.
Pool generate_pool(const DelayMatrix& dm, std::size_t count, const PoolBudget& budget, const IgConfig& ig,
                   std::uint64_t seed, std::size_t threads = 1);

/// The time budget used for pool members: n^2 * factor ms.
std::int64_t pool_time_ms(std::size_t n_jobs, double factor = 10.0);

/// Meta-jobs sorted by decreasing internal + tail, each inserted at its best position,
/// then first-improvement hill climbing over insertion moves. Returns a meta-permutation.
std::vector<JobId> initial_solution(const ReducedProblem& reduced, Rng& rng);

/// Super-jobs mined at each confidence level in turn; the incumbent is projected onto the
/// level's blocks and improved by IG on the reduced problem. Throws std::logic_error if a
/// projection fails (the pool/schedule broke the refinement property).
IgsjResult igsj(const DelayMatrix& dm, const Pool& pool, const IgsjConfig& cfg);

struct IigsjConfig {
    std::size_t iterations = 5;   ///< I
    std::size_t pool_width = 20;  ///< R
    std::size_t sample_size = 10; ///< rho
    IgsjConfig inner;
    std::uint64_t seed = 1;
    std::size_t threads = 1;
};

struct IterationRecord {
    std::size_t iteration = 0;
    Time best_makespan = 0;   ///< best-so-far after the iteration
    Time pool_best = 0;
    double pool_mean = 0.0;
    std::int64_t elapsed_ms = 0;
};

struct IigsjResult {
    Permutation best;
    Time best_makespan = 0;
    std::vector<Pool> pools;  ///< pools[0] is the input pool, pools[i] the output of iteration i
    std::vector<IterationRecord> iterations;
};

/// Each iteration builds R new solutions, each from igsj on rho solutions sampled without
/// replacement from the previous pool. Throws InputError if the input pool is smaller than rho.
IigsjResult iigsj(const DelayMatrix& dm, const Pool& p0, const IigsjConfig& cfg);

}  // namespace nwfs
