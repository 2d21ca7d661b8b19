#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nwfs/instance.hpp"
#include "nwfs/permutation.hpp"
#include "nwfs/types.hpp"

namespace nwfs {

/// Pairwise start-up delays plus a per-job tail, the whole cost model of a
/// no-wait sequence:
///
///     cost(seq) = offset + sum_k delay(seq[k-1], seq[k]) + tail(seq.back())
///
/// For an instance the tail is the job's total processing time and the offset is
/// zero. Reduced (super-job) problems reuse the same layout with a non-zero offset,
/// so every search routine runs unchanged on either.
///
/// Immutable once built; share freely across threads.
class DelayMatrix {
public:
    DelayMatrix() = default;

    /// Builds the n x n delay table of `inst`, O(n^2 m).
    explicit DelayMatrix(const Instance& inst);

    /// Assembles a model from precomputed parts. `delays` is row-major n x n
    /// (diagonal ignored), `tail` has n entries.
    static DelayMatrix from_parts(std::size_t n, std::vector<Time> delays, std::vector<Time> tail,
                                  Time offset);

    std::size_t size() const noexcept { return n_; }

    Time delay(JobId from, JobId to) const { return delays_[static_cast<std::size_t>(from) * n_ + to]; }
    Time tail(JobId job) const { return tail_[job]; }
    /// Alias of tail() for instance-built matrices.
    Time job_total(JobId job) const { return tail_[job]; }
    Time offset() const noexcept { return offset_; }

    const Time* data() const noexcept { return delays_.data(); }
    const Time* tails() const noexcept { return tail_.data(); }

    /// Cost of an arbitrary (possibly partial) sequence, no validation. Empty -> offset.
    Time evaluate(std::span<const JobId> seq) const;

private:
    std::size_t n_ = 0;
    std::vector<Time> delays_;
    std::vector<Time> tail_;
    Time offset_ = 0;
};

struct Evaluation {
    Time makespan = 0;
    /// Completion time of the job at each position, when requested.
    std::optional<std::vector<Time>> completion;
};

/// Delay between consecutive jobs i then k; throws InputError on bad ids or i == k.
Time delay(const Instance& inst, JobId i, JobId k);

DelayMatrix build_delay_matrix(const Instance& inst);

/// Delay-based makespan, O(N). Throws InputError if `perm` does not cover dm's jobs.
Evaluation makespan(const DelayMatrix& dm, const Permutation& perm, bool with_completion = false);

/// Makespan by simulating the schedule machine by machine: each job starts as early as
/// machine exclusivity allows while its operations run back to back. Independent of
/// the delay formula; used as a test oracle.
Evaluation makespan_simulate(const Instance& inst, const Permutation& perm);

}  // namespace nwfs
