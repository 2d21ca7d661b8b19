#include "nwfs/instance.hpp"

#include <numeric>
#include <string>

namespace nwfs {

Instance::Instance(std::size_t n_jobs, std::size_t n_machines, std::vector<Time> proc)
    : n_jobs_(n_jobs), n_machines_(n_machines), proc_(std::move(proc)) {
    if (n_jobs_ == 0 || n_machines_ == 0)
        throw InputError("instance needs at least one job and one machine");
    if (proc_.size() != n_jobs_ * n_machines_)
        throw InputError("processing-time matrix has " + std::to_string(proc_.size()) +
                         " entries, expected " + std::to_string(n_jobs_ * n_machines_));
    for (std::size_t k = 0; k < proc_.size(); ++k) {
        if (proc_[k] < 1)
            throw InputError("processing time of job " + std::to_string(k / n_machines_) +
                             " on machine " + std::to_string(k % n_machines_) + " is below 1");
    }
}

Instance Instance::from_rows(const std::vector<std::vector<Time>>& job_rows) {
    if (job_rows.empty())
        throw InputError("instance needs at least one job");
    const std::size_t m = job_rows.front().size();
    std::vector<Time> flat;
    flat.reserve(job_rows.size() * m);
    for (const auto& row : job_rows) {
        if (row.size() != m)
            throw InputError("ragged processing-time rows");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return Instance(job_rows.size(), m, std::move(flat));
}

Time Instance::job_total(std::size_t job) const {
    auto ops = this->job(job);
    return std::accumulate(ops.begin(), ops.end(), Time{0});
}

Time Instance::total_work() const {
    return std::accumulate(proc_.begin(), proc_.end(), Time{0});
}

}  // namespace nwfs
