#include "nwfs/neighborhood.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nwfs/kernels.hpp"

namespace nwfs {

namespace {

void check_move(std::size_t n, InsertionMove mv) {
    if (mv.from >= n || mv.to >= n)
        throw InputError("insertion move " + std::to_string(mv.from) + "->" + std::to_string(mv.to) +
                         " out of range for length " + std::to_string(n));
    if (mv.from == mv.to)
        throw InputError("insertion move must change the position");
}

}  // namespace

void apply_insertion(std::vector<JobId>& seq, InsertionMove mv) {
    check_move(seq.size(), mv);
    auto first = seq.begin();
    if (mv.from < mv.to)
        std::rotate(first + mv.from, first + mv.from + 1, first + mv.to + 1);
    else
        std::rotate(first + mv.to, first + mv.from, first + mv.from + 1);
}

Permutation apply_insertion(const Permutation& perm, InsertionMove mv) {
    std::vector<JobId> seq = perm.order();
    apply_insertion(seq, mv);
    return Permutation(std::move(seq));
}

Time delta_makespan(const DelayMatrix& dm, std::span<const JobId> seq, InsertionMove mv) {
    const std::size_t n = seq.size();
    check_move(n, mv);
    const std::size_t i = mv.from;
    const std::size_t k = mv.to;
    const JobId x = seq[i];

    // Removal of x from position i.
    Time delta = 0;
    if (i == 0) {
        delta -= dm.delay(x, seq[1]);
    } else if (i == n - 1) {
        delta += dm.tail(seq[i - 1]) - dm.delay(seq[i - 1], x) - dm.tail(x);
    } else {
        delta += dm.delay(seq[i - 1], seq[i + 1]) - dm.delay(seq[i - 1], x) - dm.delay(x, seq[i + 1]);
    }

    // Insertion at index k of the reduced sequence r, where r[t] = seq[t < i ? t : t + 1].
    auto reduced = [&](std::size_t t) { return seq[t < i ? t : t + 1]; };
    const std::size_t reduced_len = n - 1;
    if (k == 0) {
        delta += dm.delay(x, reduced(0));
    } else if (k == reduced_len) {
        const JobId p = reduced(k - 1);
        delta += dm.delay(p, x) + dm.tail(x) - dm.tail(p);
    } else {
        const JobId p = reduced(k - 1);
        const JobId s = reduced(k);
        delta += dm.delay(p, x) + dm.delay(x, s) - dm.delay(p, s);
    }
    return delta;
}

Time delta_makespan(const DelayMatrix& dm, const Permutation& perm, InsertionMove mv) {
    if (perm.size() != dm.size())
        throw InputError("permutation does not cover the model's jobs");
    return delta_makespan(dm, perm.jobs(), mv);
}

BestInsertion best_insertion(const DelayMatrix& dm, std::span<const JobId> partial, JobId job) {
    if (job < 0 || static_cast<std::size_t>(job) >= dm.size())
        throw InputError("job id " + std::to_string(job) + " out of range");
    if (std::find(partial.begin(), partial.end(), job) != partial.end())
        throw InputError("job " + std::to_string(job) + " is already in the sequence");
    const auto scan = kernels::insertion_scan(dm.data(), dm.size(), dm.tails(), partial, job);
    BestInsertion out;
    out.position = scan.position;
    out.sequence.reserve(partial.size() + 1);
    out.sequence.assign(partial.begin(), partial.end());
    out.sequence.insert(out.sequence.begin() + static_cast<std::ptrdiff_t>(scan.position), job);
    out.makespan = dm.evaluate(partial) + scan.delta;
    return out;
}

Time local_search(const DelayMatrix& dm, std::vector<JobId>& seq, Time cost, Rng& rng,
                  LocalSearchStats* stats) {
    const std::size_t n = seq.size();
    LocalSearchStats local;
    if (n < 2) {
        if (stats)
            *stats = local;
        return cost;
    }
    std::vector<JobId> order(seq);
    std::vector<JobId> rest;
    rest.reserve(n);

    bool improved = true;
    while (improved) {
        improved = false;
        ++local.passes;
        std::shuffle(order.begin(), order.end(), rng);
        for (JobId job : order) {
            const auto at = static_cast<std::size_t>(std::find(seq.begin(), seq.end(), job) - seq.begin());

            Time removal;
            if (at == 0)
                removal = -dm.delay(job, seq[1]);
            else if (at == n - 1)
                removal = dm.tail(seq[at - 1]) - dm.delay(seq[at - 1], job) - dm.tail(job);
            else
                removal = dm.delay(seq[at - 1], seq[at + 1]) - dm.delay(seq[at - 1], job) -
                          dm.delay(job, seq[at + 1]);

            rest.assign(seq.begin(), seq.end());
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(at));
            const auto scan = kernels::insertion_scan(dm.data(), n, dm.tails(), rest, job);
            if (removal + scan.delta < 0) {
                rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(scan.position), job);
                seq.swap(rest);
                cost += removal + scan.delta;
                ++local.improvements;
                improved = true;
            }
        }
    }
    if (stats)
        *stats = local;
    return cost;
}

Permutation local_search(const DelayMatrix& dm, const Permutation& perm, Rng& rng, LocalSearchStats* stats) {
    if (perm.size() != dm.size())
        throw InputError("permutation does not cover the model's jobs");
    std::vector<JobId> seq = perm.order();
    local_search(dm, seq, dm.evaluate(seq), rng, stats);
    return Permutation(std::move(seq));
}

bool is_local_optimum(const DelayMatrix& dm, std::span<const JobId> seq) {
    const std::size_t n = seq.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (i != k && delta_makespan(dm, seq, {i, k}) < 0)
                return false;
    return true;
}

}  // namespace nwfs
