#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nwfs/delay_matrix.hpp"
#include "nwfs/permutation.hpp"

namespace nwfs {

/// A set of good solutions over one job set, from which super-jobs are mined.
class Pool {
public:
    Pool() = default;
    /// Throws InputError when empty or when the solutions disagree on the job count.
    explicit Pool(std::vector<Permutation> solutions, std::string source = "ig-run");

    std::size_t size() const noexcept { return solutions_.size(); }
    std::size_t n_jobs() const noexcept { return solutions_.empty() ? 0 : solutions_.front().size(); }
    const std::vector<Permutation>& solutions() const noexcept { return solutions_; }
    const std::string& source() const noexcept { return source_; }

private:
    std::vector<Permutation> solutions_;
    std::string source_;
};

/// Pool-frequency threshold in percent, or "infinite" (no super-jobs at all).
class Confidence {
public:
    /// Throws InputError unless 0 < percent <= 100.
    explicit Confidence(double percent);
    static Confidence infinite() noexcept { return Confidence(); }
    /// Accepts "60", "60%", "inf", "infinity", "∞".
    static Confidence parse(const std::string& text);

    bool is_infinite() const noexcept { return infinite_; }
    double percent() const noexcept { return percent_; }
    /// Minimum pair count for a pool of `pool_size` solutions: ceil(percent/100 * size).
    std::size_t min_count(std::size_t pool_size) const;
    std::string to_string() const;

    bool operator<(const Confidence& other) const noexcept;
    bool operator==(const Confidence& other) const noexcept = default;

private:
    Confidence() : percent_(0.0), infinite_(true) {}
    double percent_;
    bool infinite_;
};

using SuperJob = std::vector<JobId>;

/// Ordered blocks of jobs partitioning the job set.
class SuperJobSet {
public:
    SuperJobSet() = default;
    /// Throws InputError unless `blocks` partition {0, ..., n_jobs-1} with no empty block.
    SuperJobSet(std::vector<SuperJob> blocks, std::size_t n_jobs, Confidence sigma = Confidence::infinite());

    static SuperJobSet singletons(std::size_t n_jobs);

    std::size_t size() const noexcept { return blocks_.size(); }
    std::size_t n_jobs() const noexcept { return block_of_.size(); }
    const std::vector<SuperJob>& blocks() const noexcept { return blocks_; }
    const SuperJob& block(std::size_t b) const { return blocks_[b]; }
    const Confidence& sigma() const noexcept { return sigma_; }

    /// Index of the block holding `job`, and the job's offset inside it.
    std::size_t block_of(JobId job) const { return block_of_[job]; }
    std::size_t offset_in_block(JobId job) const { return offset_[job]; }

    /// "[a b c] [d] [e f]"
    std::string to_string() const;

    bool operator==(const SuperJobSet& other) const { return blocks_ == other.blocks_; }

private:
    std::vector<SuperJob> blocks_;
    std::vector<std::size_t> block_of_;
    std::vector<std::size_t> offset_;
    Confidence sigma_ = Confidence::infinite();
};

using PairCounts = std::map<std::pair<JobId, JobId>, std::size_t>;

/// Number of pool solutions in which b immediately follows a, for every pair that occurs.
PairCounts adjacency_frequency(const Pool& pool);

/// Super-jobs at confidence `sigma`: pairs seen in at least min_count solutions, conflicts
/// and cycles resolved in favour of the more frequent pair (ties: smaller ids), chained into
/// maximal blocks. Blocks are ordered by their first job.
SuperJobSet identify(const Pool& pool, Confidence sigma);

/// The meta-problem in which every block acts as a single job. `model` has one
/// row/column per block: delay(S, S') = d[last(S)][first(S')], tail(S) = job_total[last(S)]
/// and offset = sum of internal block delays, so model.evaluate(meta) equals the makespan
/// of the expanded permutation.
struct ReducedProblem {
    SuperJobSet blocks;
    DelayMatrix model;
    std::vector<Time> internal;  ///< delay sum inside each block
    Time internal_sum = 0;

    std::size_t size() const noexcept { return blocks.size(); }
    Time evaluate(std::span<const JobId> meta) const { return model.evaluate(meta); }
};

ReducedProblem reduce(const DelayMatrix& dm, const SuperJobSet& sjs);

/// Concatenates blocks in `meta` order. Throws InputError on a missing or repeated block.
Permutation expand(const SuperJobSet& sjs, std::span<const JobId> meta);

/// The meta-permutation whose expansion is `perm`. Throws ProjectionError when a block
/// does not appear as a contiguous run in block order.
std::vector<JobId> project(const Permutation& perm, const SuperJobSet& sjs);

}  // namespace nwfs
