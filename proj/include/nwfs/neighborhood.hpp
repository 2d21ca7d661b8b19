#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nwfs/delay_matrix.hpp"
#include "nwfs/permutation.hpp"
#include "nwfs/rng.hpp"

namespace nwfs {

/// Take the job at `from` and reinsert it so that it ends up at index `to`;
/// jobs in between shift by one.
struct InsertionMove {
    std::size_t from = 0;
    std::size_t to = 0;

    bool operator==(const InsertionMove&) const = default;
};

Permutation apply_insertion(const Permutation& perm, InsertionMove mv);

/// In-place variant on a raw sequence, no validation beyond index bounds.
void apply_insertion(std::vector<JobId>& seq, InsertionMove mv);

/// cost(apply_insertion(perm, mv)) - cost(perm) from O(1) delay lookups.
Time delta_makespan(const DelayMatrix& dm, std::span<const JobId> seq, InsertionMove mv);
Time delta_makespan(const DelayMatrix& dm, const Permutation& perm, InsertionMove mv);

struct BestInsertion {
    std::size_t position = 0;
    std::vector<JobId> sequence;  ///< `partial` with the job inserted
    Time makespan = 0;            ///< cost of `sequence`
};

/// Cheapest insertion of `job` into a sequence over a subset of the jobs.
/// Ties go to the smallest position. Throws InputError if `job` is already present.
BestInsertion best_insertion(const DelayMatrix& dm, std::span<const JobId> partial, JobId job);

struct LocalSearchStats {
    std::size_t passes = 0;
    std::size_t improvements = 0;
};

/// Iterative improvement: every pass visits all jobs in a freshly shuffled order and
/// moves each to its best position when that strictly lowers the cost. Stops after a
/// pass without improvement, so the result has no strictly improving insertion move.
/// Works in place; returns the final cost.
Time local_search(const DelayMatrix& dm, std::vector<JobId>& seq, Time cost, Rng& rng,
                  LocalSearchStats* stats = nullptr);

Permutation local_search(const DelayMatrix& dm, const Permutation& perm, Rng& rng,
                         LocalSearchStats* stats = nullptr);

/// True when no insertion move strictly lowers the cost (O(n^2) scan).
bool is_local_optimum(const DelayMatrix& dm, std::span<const JobId> seq);

}  // namespace nwfs
