#include "nwfs/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

#include "nwfs/delay_matrix.hpp"
#include "nwfs/neighborhood.hpp"

namespace nwfs {

namespace {

constexpr std::size_t kHardCap = 12;

struct Partial {
    std::vector<RankedSolution> best;  // max-heap under ranks_before, size <= keep + 1
    RankedSolution global;
    bool has_global = false;
    std::uint64_t enumerated = 0;
    std::uint64_t classified = 0;
    std::uint64_t optima_total = 0;
};

bool lex_less(const std::vector<JobId>& a, const std::vector<JobId>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Enumerates every permutation whose first job is `head`.
void scan_prefix(const DelayMatrix& dm, JobId head, const EnumerateOptions& opts, Partial& out) {
    const std::size_t n = dm.size();
    // The global optimum is also a local optimum, so one extra heap slot lets it be
    // dropped from the list afterwards.
    const std::size_t slots = opts.keep + 1;
    auto heap_less = [](const RankedSolution& a, const RankedSolution& b) { return ranks_before(a, b); };

    std::vector<JobId> seq;
    seq.push_back(head);
    for (JobId j = 0; j < static_cast<JobId>(n); ++j)
        if (j != head)
            seq.push_back(j);

    do {
        ++out.enumerated;
        const Time cost = dm.evaluate(seq);
        if (!out.has_global || cost < out.global.makespan ||
            (cost == out.global.makespan && lex_less(seq, out.global.permutation.order()))) {
            out.global = {Permutation(seq), cost};
            out.has_global = true;
        }
        bool may_enter = out.best.size() < slots;
        if (!may_enter) {
            const auto& worst = out.best.front();
            may_enter = cost < worst.makespan ||
                        (cost == worst.makespan && lex_less(seq, worst.permutation.order()));
        }
        if (!may_enter && !opts.full_scan)
            continue;
        ++out.classified;
        if (!is_local_optimum(dm, seq))
            continue;
        ++out.optima_total;
        if (!may_enter)
            continue;
        out.best.push_back({Permutation(seq), cost});
        std::push_heap(out.best.begin(), out.best.end(), heap_less);
        if (out.best.size() > slots) {
            std::pop_heap(out.best.begin(), out.best.end(), heap_less);
            out.best.pop_back();
        }
    } while (std::next_permutation(seq.begin() + 1, seq.end()));
}

}  // namespace

bool ranks_before(const RankedSolution& a, const RankedSolution& b) {
    if (a.makespan != b.makespan)
        return a.makespan < b.makespan;
    return a.permutation < b.permutation;
}

LocalOptimaReport enumerate_local_optima(const Instance& inst, const EnumerateOptions& opts) {
    const std::size_t n = inst.n_jobs();
    const std::size_t cap = opts.allow_large ? std::max(opts.cap, kHardCap) : opts.cap;
    if (n > cap)
        throw RefusalError("exhaustive enumeration of " + std::to_string(n) + " jobs exceeds the cap of " +
                           std::to_string(cap) + (opts.allow_large ? "" : " (pass the large-instance override for up to 12)"));
    if (opts.allow_large && n > kHardCap)
        throw RefusalError("exhaustive enumeration is limited to " + std::to_string(kHardCap) + " jobs");

    const DelayMatrix dm(inst);
    std::vector<Partial> parts(n);
    const std::size_t workers = std::clamp<std::size_t>(opts.threads, 1, n);
    if (workers == 1) {
        for (std::size_t h = 0; h < n; ++h)
            scan_prefix(dm, static_cast<JobId>(h), opts, parts[h]);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t h = w; h < n; h += workers)
                    scan_prefix(dm, static_cast<JobId>(h), opts, parts[h]);
            });
        }
        for (auto& t : pool)
            t.join();
    }

    // Deterministic merge: everything is ordered by (makespan, sequence).
    LocalOptimaReport report;
    std::vector<RankedSolution> merged;
    bool has_global = false;
    for (auto& part : parts) {
        report.enumerated += part.enumerated;
        report.classified += part.classified;
        report.local_optima_total += part.optima_total;
        if (part.has_global && (!has_global || ranks_before(part.global, report.global_optimum))) {
            report.global_optimum = part.global;
            has_global = true;
        }
        merged.insert(merged.end(), part.best.begin(), part.best.end());
    }
    std::sort(merged.begin(), merged.end(), ranks_before);
    for (auto& sol : merged) {
        if (sol == report.global_optimum)
            continue;
        if (report.local_optima.size() == opts.keep)
            break;
        report.local_optima.push_back(std::move(sol));
    }
    if (!opts.full_scan)
        report.local_optima_total = 0;
    return report;
}

}  // namespace nwfs
