#include "nwfs/igsj.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nwfs/kernels.hpp"
#include "nwfs/neighborhood.hpp"
#include "nwfs/parallel.hpp"

namespace nwfs {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Time evaluate_perm(const DelayMatrix& dm, const Permutation& p) { return dm.evaluate(p.jobs()); }

}  // namespace

// -- schedule -------------------------------------------------------------------

ConfidenceSchedule::ConfidenceSchedule(std::vector<Confidence> levels) : levels_(std::move(levels)) {
    if (levels_.empty())
        throw InputError("confidence schedule is empty");
    for (std::size_t k = 1; k < levels_.size(); ++k)
        if (!(levels_[k - 1] < levels_[k]))
            throw InputError("confidence schedule must be strictly increasing: " + to_string());
}

ConfidenceSchedule ConfidenceSchedule::coarse() {
    return ConfidenceSchedule({Confidence(60), Confidence(80), Confidence::infinite()});
}

ConfidenceSchedule ConfidenceSchedule::fine() {
    return ConfidenceSchedule(
        {Confidence(60), Confidence(70), Confidence(80), Confidence(90), Confidence::infinite()});
}

ConfidenceSchedule ConfidenceSchedule::parse(const std::string& text) {
    std::vector<Confidence> levels;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        levels.push_back(Confidence::parse(item));
    return ConfidenceSchedule(std::move(levels));
}

std::string ConfidenceSchedule::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < levels_.size(); ++k)
        out += (k ? "," : "") + levels_[k].to_string();
    return out;
}

IgConfig PhaseBudget::apply(IgConfig base, std::size_t n_sj) const {
    if (time_factor <= 0.0 && noimprove_factor <= 0.0)
        throw InputError("phase budget needs a positive time or no-improve factor");
    const double n = static_cast<double>(n_sj);
    base.max_time_ms.reset();
    base.max_no_improve.reset();
    base.max_iterations.reset();
    if (time_factor > 0.0)
        base.max_time_ms = static_cast<std::int64_t>(std::llround(time_factor * n * n));
    if (noimprove_factor > 0.0)
        base.max_no_improve = static_cast<std::int64_t>(std::llround(noimprove_factor * n));
    return base;
}

// -- pool -----------------------------------------------------------------------

std::int64_t pool_time_ms(std::size_t n_jobs, double factor) {
    const double n = static_cast<double>(n_jobs);
    return static_cast<std::int64_t>(std::llround(factor * n * n));
}

Pool generate_pool(const DelayMatrix& dm, std::size_t count, const PoolBudget& budget, const IgConfig& ig,
                   std::uint64_t seed, std::size_t threads) {
    if (count < 1)
        throw InputError("pool size must be at least 1");
    if (budget.time_ms <= 0 && !budget.max_no_improve)
        throw InputError("pool runs need a time or no-improve budget");
    const std::size_t n = dm.size();
    std::vector<Permutation> members(count);
    parallel_for(count, threads, [&](std::size_t run) {
        const std::uint64_t run_seed = derive_seed(seed, run);
        Rng rng(run_seed);
        std::vector<JobId> order(n);
        std::iota(order.begin(), order.end(), JobId{0});
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<JobId> start = construct(dm, {}, order);

        IgConfig cfg = ig;
        cfg.max_time_ms.reset();
        cfg.max_no_improve = budget.max_no_improve;
        cfg.max_iterations.reset();
        if (budget.time_ms > 0)
            cfg.max_time_ms = budget.time_ms;
        cfg.seed = derive_seed(run_seed, 1);
        members[run] = iterated_greedy(dm, Permutation(std::move(start)), cfg).best;
    });
    return Pool(std::move(members), "ig-run");
}

// -- initial solution -----------------------------------------------------------

std::vector<JobId> initial_solution(const ReducedProblem& reduced, Rng& rng) {
    const DelayMatrix& model = reduced.model;
    const std::size_t b = model.size();

    std::vector<JobId> order(b);
    std::iota(order.begin(), order.end(), JobId{0});
    std::stable_sort(order.begin(), order.end(), [&](JobId x, JobId y) {
        return reduced.internal[x] + model.tail(x) > reduced.internal[y] + model.tail(y);
    });
    std::vector<JobId> seq = construct(model, {}, order);

    // First-improvement hill climbing.
    std::vector<JobId> visit(seq);
    bool improved = b > 1;
    while (improved) {
        improved = false;
        std::shuffle(visit.begin(), visit.end(), rng);
        for (JobId meta : visit) {
            const auto from = static_cast<std::size_t>(std::find(seq.begin(), seq.end(), meta) - seq.begin());
            for (std::size_t to = 0; to < b; ++to) {
                if (to == from)
                    continue;
                if (delta_makespan(model, seq, {from, to}) < 0) {
                    apply_insertion(seq, {from, to});
                    improved = true;
                    break;
                }
            }
        }
    }
    return seq;
}

// -- IG_SJ ------------------------------------------------------------------------

IgsjResult igsj(const DelayMatrix& dm, const Pool& pool, const IgsjConfig& cfg) {
    if (pool.n_jobs() != dm.size())
        throw InputError("pool solutions do not match the instance size");
    if (cfg.schedule.size() == 0)
        throw InputError("confidence schedule is empty");
    const auto started = Clock::now();
    IgsjResult result;

    Rng init_rng(derive_seed(cfg.seed, 0));
    const Confidence first = cfg.schedule.levels().front();
    const ReducedProblem start = reduce(dm, identify(pool, first));
    const std::vector<JobId> start_meta = initial_solution(start, init_rng);
    Permutation current = expand(start.blocks, start_meta);
    Time current_cost = evaluate_perm(dm, current);
    result.trace.push_back(
        {"init", first, start.size(), current_cost, ms_since(started), 0, start.blocks.to_string()});

    std::uint64_t phase = 0;
    for (const Confidence& sigma : cfg.schedule.levels()) {
        ++phase;
        const auto phase_start = Clock::now();
        const ReducedProblem reduced = reduce(dm, identify(pool, sigma));
        std::vector<JobId> meta;
        try {
            meta = project(current, reduced.blocks);
        } catch (const ProjectionError& e) {
            throw std::logic_error(std::string("incumbent does not refine onto sigma=") + sigma.to_string() +
                                   ": " + e.what());
        }
        if (reduced.evaluate(meta) != current_cost)
            throw std::logic_error("reduced evaluation disagrees with the full makespan");

        IgConfig ig = cfg.budget.apply(cfg.ig, reduced.size());
        ig.seed = derive_seed(cfg.seed, phase);
        const IgResult run = iterated_greedy(reduced.model, Permutation(std::move(meta)), ig);
        if (run.best_makespan < current_cost) {
            current = expand(reduced.blocks, run.best.jobs());
            current_cost = run.best_makespan;
        }
        result.trace.push_back({"ig", sigma, reduced.size(), current_cost, ms_since(phase_start), run.iterations,
                                reduced.blocks.to_string()});
    }

    result.best = std::move(current);
    result.best_makespan = current_cost;
    result.elapsed_ms = ms_since(started);
    return result;
}

// -- IIG_SJ -----------------------------------------------------------------------

IigsjResult iigsj(const DelayMatrix& dm, const Pool& p0, const IigsjConfig& cfg) {
    if (cfg.iterations < 1)
        throw InputError("IIG_SJ needs at least one iteration");
    if (cfg.sample_size < 1)
        throw InputError("sample size must be at least 1");
    // Pools after the first hold R solutions; a single iteration only samples p0.
    if (cfg.iterations > 1 && cfg.sample_size > cfg.pool_width)
        throw InputError("sample size must not exceed R when iterating");
    if (p0.size() < cfg.sample_size)
        throw InputError("initial pool has " + std::to_string(p0.size()) + " solutions, fewer than rho = " +
                         std::to_string(cfg.sample_size));

    IigsjResult result;
    result.pools.push_back(p0);
    const auto& initial = p0.solutions();
    auto best_it = std::min_element(initial.begin(), initial.end(), [&](const Permutation& a, const Permutation& b) {
        return evaluate_perm(dm, a) < evaluate_perm(dm, b);
    });
    result.best = *best_it;
    result.best_makespan = evaluate_perm(dm, result.best);

    for (std::size_t iter = 1; iter <= cfg.iterations; ++iter) {
        const auto started = Clock::now();
        const Pool& previous = result.pools.back();
        const std::uint64_t iter_seed = derive_seed(cfg.seed, iter);
        std::vector<Permutation> slots(cfg.pool_width);
        std::vector<Time> costs(cfg.pool_width);

        parallel_for(cfg.pool_width, cfg.threads, [&](std::size_t k) {
            const std::uint64_t slot_seed = derive_seed(iter_seed, k);
            Rng pick_rng(slot_seed);
            std::vector<std::size_t> index(previous.size());
            std::iota(index.begin(), index.end(), std::size_t{0});
            std::vector<std::size_t> chosen;
            std::sample(index.begin(), index.end(), std::back_inserter(chosen), cfg.sample_size, pick_rng);
            std::vector<Permutation> sample;
            for (std::size_t c : chosen)
                sample.push_back(previous.solutions()[c]);

            IgsjConfig inner = cfg.inner;
            inner.seed = derive_seed(slot_seed, 1);
            IgsjResult run = igsj(dm, Pool(std::move(sample), "iteration-" + std::to_string(iter - 1)), inner);
            costs[k] = run.best_makespan;
            slots[k] = std::move(run.best);
        });

        for (std::size_t k = 0; k < slots.size(); ++k) {
            if (costs[k] < result.best_makespan) {
                result.best = slots[k];
                result.best_makespan = costs[k];
            }
        }
        IterationRecord rec;
        rec.iteration = iter;
        rec.best_makespan = result.best_makespan;
        rec.pool_best = *std::min_element(costs.begin(), costs.end());
        rec.pool_mean = static_cast<double>(std::accumulate(costs.begin(), costs.end(), Time{0})) /
                        static_cast<double>(costs.size());
        rec.elapsed_ms = ms_since(started);
        result.iterations.push_back(rec);
        result.pools.emplace_back(std::move(slots), "iteration-" + std::to_string(iter));
    }
    return result;
}

}  // namespace nwfs
