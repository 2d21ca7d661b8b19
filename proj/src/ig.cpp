#include "nwfs/ig.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "nwfs/kernels.hpp"
#include "nwfs/neighborhood.hpp"

namespace nwfs {

double default_temperature(const Instance& inst, double tau) {
    const double cells = static_cast<double>(inst.n_jobs() * inst.n_machines());
    return tau * static_cast<double>(inst.total_work()) / (cells * 10.0);
}

Destruction destruct(std::span<const JobId> seq, std::size_t count, Rng& rng) {
    if (count < 1 || count >= seq.size())
        throw InputError("destruction size " + std::to_string(count) + " outside [1, " +
                         std::to_string(seq.size()) + ")");
    Destruction out;
    out.partial.assign(seq.begin(), seq.end());
    out.removed.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::uniform_int_distribution<std::size_t> pick(0, out.partial.size() - 1);
        const auto at = out.partial.begin() + static_cast<std::ptrdiff_t>(pick(rng));
        out.removed.push_back(*at);
        out.partial.erase(at);
    }
    return out;
}

std::vector<JobId> construct(const DelayMatrix& dm, std::vector<JobId> partial,
                             std::span<const JobId> removed) {
    std::vector<bool> present(dm.size(), false);
    for (JobId j : partial)
        present[j] = true;
    for (JobId j : removed) {
        if (j < 0 || static_cast<std::size_t>(j) >= dm.size())
            throw InputError("job id " + std::to_string(j) + " out of range");
        if (present[j])
            throw InputError("job " + std::to_string(j) + " is both kept and removed");
        present[j] = true;
    }
    partial.reserve(partial.size() + removed.size());
    for (JobId j : removed) {
        const auto scan = kernels::insertion_scan(dm.data(), dm.size(), dm.tails(), partial, j);
        partial.insert(partial.begin() + static_cast<std::ptrdiff_t>(scan.position), j);
    }
    return partial;
}

Permutation neh_start(const DelayMatrix& dm) {
    std::vector<JobId> order(dm.size());
    std::iota(order.begin(), order.end(), JobId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](JobId a, JobId b) { return dm.job_total(a) > dm.job_total(b); });
    return Permutation(construct(dm, {}, order));
}

bool accept(Time candidate, Time current, double temperature, Rng& rng) {
    if (candidate <= current)
        return true;
    if (temperature <= 0.0)
        return false;
    const double p = std::exp(-static_cast<double>(candidate - current) / temperature);
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

IgResult iterated_greedy(const DelayMatrix& dm, const Permutation& init, const IgConfig& cfg) {
    if (init.size() != dm.size())
        throw InputError("initial permutation does not cover the model's jobs");
    if (!cfg.max_time_ms && !cfg.max_no_improve && !cfg.max_iterations)
        throw InputError("iterated greedy needs at least one stop rule");
    if (cfg.destruction_size < 1)
        throw InputError("destruction size must be at least 1");
    if (cfg.temperature < 0.0)
        throw InputError("temperature must be non-negative");

    using Clock = std::chrono::steady_clock;
    const auto started = Clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
    };

    Rng rng(cfg.seed);
    std::vector<JobId> current = init.order();
    Time current_cost = local_search(dm, current, dm.evaluate(current), rng);
    std::vector<JobId> best = current;
    Time best_cost = current_cost;

    IgResult result;
    result.improvement_trace.push_back({0, best_cost});

    // Reduced problems can have fewer meta-jobs than the configured destruction size.
    const std::size_t n = dm.size();
    const std::size_t d = n > 1 ? std::min(cfg.destruction_size, n - 1) : 0;

    std::int64_t iteration = 0;
    std::int64_t no_improve = 0;
    while (d > 0) {
        if (cfg.max_iterations && iteration >= *cfg.max_iterations)
            break;
        if (cfg.max_no_improve && no_improve >= *cfg.max_no_improve)
            break;
        if (cfg.max_time_ms && elapsed_ms() >= *cfg.max_time_ms)
            break;

        auto [partial, removed] = destruct(current, d, rng);
        std::vector<JobId> candidate = construct(dm, std::move(partial), removed);
        const Time candidate_cost = local_search(dm, candidate, dm.evaluate(candidate), rng);
        ++iteration;

        if (candidate_cost < best_cost) {
            best = candidate;
            best_cost = candidate_cost;
            no_improve = 0;
            result.improvement_trace.push_back({iteration, best_cost});
        } else {
            ++no_improve;
        }

        const Time reference = cfg.acceptance == Acceptance::incumbent ? current_cost : best_cost;
        // In best-ever mode a new best has already become the reference; ties accept it.
        if (accept(candidate_cost, reference, cfg.temperature, rng)) {
            current = std::move(candidate);
            current_cost = candidate_cost;
        }
    }

    result.best = Permutation(std::move(best));
    result.best_makespan = best_cost;
    result.iterations = iteration;
    result.elapsed_ms = elapsed_ms();
    return result;
}

}  // namespace nwfs
