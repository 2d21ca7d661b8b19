#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nwfs/types.hpp"

namespace nwfs {

/// Job x machine processing-time matrix. Stored job-major: a job's operations are contiguous.
class Instance {
public:
    Instance() = default;

    /// `proc` is job-major, size n_jobs * n_machines; every entry must be >= 1.
    Instance(std::size_t n_jobs, std::size_t n_machines, std::vector<Time> proc);

    /// One inner vector per job. All rows must have the same length.
    static Instance from_rows(const std::vector<std::vector<Time>>& job_rows);

    std::size_t n_jobs() const noexcept { return n_jobs_; }
    std::size_t n_machines() const noexcept { return n_machines_; }

    Time proc(std::size_t job, std::size_t machine) const { return proc_[job * n_machines_ + machine]; }
    std::span<const Time> job(std::size_t job) const {
        return {proc_.data() + job * n_machines_, n_machines_};
    }

    /// Sum of a job's processing times over all machines.
    Time job_total(std::size_t job) const;

    /// Sum of every processing time in the instance.
    Time total_work() const;

    bool operator==(const Instance&) const = default;

private:
    std::size_t n_jobs_ = 0;
    std::size_t n_machines_ = 0;
    std::vector<Time> proc_;
};

}  // namespace nwfs
