#include "nwfs/delay_matrix.hpp"

#include <algorithm>
#include <string>

#include "nwfs/kernels.hpp"

namespace nwfs {

namespace {

void check_job(const Instance& inst, JobId j) {
    if (j < 0 || static_cast<std::size_t>(j) >= inst.n_jobs())
        throw InputError("job id " + std::to_string(j) + " out of range");
}

void check_cover(const DelayMatrix& dm, const Permutation& perm) {
    if (perm.size() != dm.size())
        throw InputError("permutation has " + std::to_string(perm.size()) + " jobs, model has " +
                         std::to_string(dm.size()));
}

}  // namespace

DelayMatrix::DelayMatrix(const Instance& inst) : n_(inst.n_jobs()), delays_(n_ * n_, 0), tail_(n_) {
    const std::size_t m = inst.n_machines();

    // head[r][k]: work of job k on machines before r; machine-major so a kernel row
    // streams across jobs.
    std::vector<Time> head(m * n_);
    for (std::size_t k = 0; k < n_; ++k) {
        Time acc = 0;
        for (std::size_t r = 0; r < m; ++r) {
            head[r * n_ + k] = acc;
            acc += inst.proc(k, r);
        }
        tail_[k] = acc;
    }

    std::vector<Time> rest(m);
    for (std::size_t i = 0; i < n_; ++i) {
        // rest[r]: work of job i on machines 1..r
        Time acc = 0;
        rest[0] = 0;
        for (std::size_t r = 1; r < m; ++r) {
            acc += inst.proc(i, r);
            rest[r] = acc;
        }
        Time* row = delays_.data() + i * n_;
        kernels::delay_row(rest, head.data(), n_, inst.proc(i, 0), row);
        row[i] = 0;
    }
}

DelayMatrix DelayMatrix::from_parts(std::size_t n, std::vector<Time> delays, std::vector<Time> tail,
                                    Time offset) {
    if (delays.size() != n * n || tail.size() != n)
        throw InputError("delay model parts do not match size " + std::to_string(n));
    DelayMatrix dm;
    dm.n_ = n;
    dm.delays_ = std::move(delays);
    dm.tail_ = std::move(tail);
    dm.offset_ = offset;
    return dm;
}

Time DelayMatrix::evaluate(std::span<const JobId> seq) const {
    if (seq.empty())
        return offset_;
    return offset_ + kernels::path_sum(delays_.data(), n_, seq) + tail_[seq.back()];
}

Time delay(const Instance& inst, JobId i, JobId k) {
    check_job(inst, i);
    check_job(inst, k);
    if (i == k)
        throw InputError("delay of a job with itself is undefined");
    Time best = 0;
    Time rest = 0;  // sum_{j=2..r} p_{i,j}
    Time head = 0;  // sum_{j=1..r-1} p_{k,j}
    for (std::size_t r = 0; r < inst.n_machines(); ++r) {
        if (r > 0) {
            rest += inst.proc(i, r);
            head += inst.proc(k, r - 1);
        }
        best = std::max(best, rest - head);
    }
    return inst.proc(i, 0) + best;
}

DelayMatrix build_delay_matrix(const Instance& inst) { return DelayMatrix(inst); }

Evaluation makespan(const DelayMatrix& dm, const Permutation& perm, bool with_completion) {
    check_cover(dm, perm);
    Evaluation ev;
    if (perm.empty())
        return ev;
    if (!with_completion) {
        ev.makespan = dm.evaluate(perm.jobs());
        return ev;
    }
    std::vector<Time> completion(perm.size());
    Time start = dm.offset();
    completion[0] = start + dm.tail(perm[0]);
    for (std::size_t k = 1; k < perm.size(); ++k) {
        start += dm.delay(perm[k - 1], perm[k]);
        completion[k] = start + dm.tail(perm[k]);
    }
    ev.makespan = completion.back();
    ev.completion = std::move(completion);
    return ev;
}

Evaluation makespan_simulate(const Instance& inst, const Permutation& perm) {
    if (perm.size() != inst.n_jobs())
        throw InputError("permutation does not cover the instance's jobs");
    const std::size_t m = inst.n_machines();
    std::vector<Time> machine_free(m, 0);
    std::vector<Time> completion(perm.size());
    Time prev_start = 0;
    for (std::size_t pos = 0; pos < perm.size(); ++pos) {
        const JobId job = perm[pos];
        // Smallest start s on machine 1 with s + (work before machine r) >= machine_free[r]
        // for every r; operations then follow without gaps.
        Time start = prev_start;
        Time before = 0;
        for (std::size_t r = 0; r < m; ++r) {
            start = std::max(start, machine_free[r] - before);
            before += inst.proc(job, r);
        }
        Time t = start;
        for (std::size_t r = 0; r < m; ++r) {
            t += inst.proc(job, r);
            machine_free[r] = t;
        }
        completion[pos] = t;
        prev_start = start;
    }
    Evaluation ev;
    ev.makespan = completion.empty() ? 0 : completion.back();
    ev.completion = std::move(completion);
    return ev;
}

}  // namespace nwfs
