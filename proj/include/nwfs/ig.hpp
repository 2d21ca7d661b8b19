#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nwfs/delay_matrix.hpp"
#include "nwfs/instance.hpp"
#include "nwfs/permutation.hpp"
#include "nwfs/rng.hpp"

namespace nwfs {

/// What a worse candidate is compared against in the annealing-style acceptance test.
enum class Acceptance {
    incumbent,  ///< the current solution (constant-temperature random walk)
    best_ever,  ///< the best solution found so far
};

struct IgConfig {
    std::size_t destruction_size = 4;
    /// Absolute temperature of the acceptance rule; 0 accepts only non-worsening moves.
    double temperature = 0.0;
    /// Stop rules; a missing value disables the rule. At least one must be set.
    std::optional<std::int64_t> max_time_ms;
    std::optional<std::int64_t> max_no_improve;
    std::optional<std::int64_t> max_iterations;
    std::uint64_t seed = 1;
    Acceptance acceptance = Acceptance::incumbent;
};

/// T = tau * (total work) / (n * m * 10).
double default_temperature(const Instance& inst, double tau = 0.4);

struct TracePoint {
    std::int64_t iteration = 0;
    Time makespan = 0;

    bool operator==(const TracePoint&) const = default;
};

struct IgResult {
    Permutation best;
    Time best_makespan = 0;
    std::int64_t iterations = 0;
    std::int64_t elapsed_ms = 0;
    /// Every new best-ever value with the iteration that produced it; starts at iteration 0.
    std::vector<TracePoint> improvement_trace;
};

struct Destruction {
    std::vector<JobId> partial;  ///< survivors, relative order kept
    std::vector<JobId> removed;  ///< in draw order
};

/// Removes `count` jobs at uniformly drawn distinct positions. Requires 1 <= count < size.
Destruction destruct(std::span<const JobId> seq, std::size_t count, Rng& rng);

/// Reinserts `removed` one by one, each at its best position.
/// Throws InputError if partial and removed overlap.
std::vector<JobId> construct(const DelayMatrix& dm, std::vector<JobId> partial,
                             std::span<const JobId> removed);

/// Annealing-style test: improvements and ties pass; a worse candidate passes with
/// probability exp(-(candidate - current) / temperature), never when temperature is 0.
bool accept(Time candidate, Time current, double temperature, Rng& rng);

/// Jobs by decreasing total processing time (ties by id), each inserted at its best position.
Permutation neh_start(const DelayMatrix& dm);

/// Destruction, greedy reconstruction, local search and acceptance until a stop rule fires.
/// Time is checked once per outer iteration. Returns the best solution ever seen.
IgResult iterated_greedy(const DelayMatrix& dm, const Permutation& init, const IgConfig& cfg);

}  // namespace nwfs
