#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nwfs/instance.hpp"
#include "nwfs/permutation.hpp"

namespace nwfs {

struct RankedSolution {
    Permutation permutation;
    Time makespan = 0;

    bool operator==(const RankedSolution&) const = default;
};

/// Total order used everywhere in the enumerator: makespan, then lexicographic sequence.
bool ranks_before(const RankedSolution& a, const RankedSolution& b);

struct LocalOptimaReport {
    RankedSolution global_optimum;
    /// Best `keep` local optima other than `global_optimum`, ascending.
    std::vector<RankedSolution> local_optima;
    std::uint64_t enumerated = 0;  ///< permutations visited (n!)
    std::uint64_t classified = 0;  ///< permutations whose neighborhood was scanned
    /// Number of local optima in the whole space; only when `full_scan` was requested.
    std::uint64_t local_optima_total = 0;
};

struct EnumerateOptions {
    std::size_t keep = 10;
    /// Default refusal threshold on n_jobs.
    std::size_t cap = 10;
    /// Lifts the cap to 12 jobs (hours of compute on one core).
    bool allow_large = false;
    /// Classify every permutation instead of only those that could enter the top `keep`.
    bool full_scan = false;
    std::size_t threads = 1;
};

/// Visits all n! permutations and reports the global optimum plus the best local optima
/// of the insertion neighborhood. Throws RefusalError above the cap.
LocalOptimaReport enumerate_local_optima(const Instance& inst, const EnumerateOptions& opts = {});

}  // namespace nwfs
