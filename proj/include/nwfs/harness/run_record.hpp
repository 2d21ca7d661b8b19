#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nwfs/types.hpp"

namespace nwfs::harness {

struct PhaseEntry {
    std::string label;      ///< "ig", "pool", "init", "sj" or "iter"
    std::string sigma;      ///< confidence level; empty when not applicable
    std::size_t n_sj = 0;
    Time makespan = 0;
    std::int64_t elapsed_ms = 0;
    std::int64_t iterations = 0;

    bool operator==(const PhaseEntry&) const = default;
};

struct RunRecord {
    std::string instance;
    std::size_t n_jobs = 0;
    std::size_t n_machines = 0;
    std::string algorithm;
    std::string config;  ///< JSON object text of the solver settings
    std::uint64_t seed = 0;
    std::size_t replication = 0;
    Time makespan = 0;
    std::optional<Time> best_known;
    std::optional<double> rpd;
    std::vector<JobId> permutation;
    std::vector<PhaseEntry> trace;
    std::int64_t wall_ms = 0;
    std::string timestamp;  ///< UTC, ISO 8601
    std::optional<std::string> error;

    bool operator==(const RunRecord&) const = default;
};

/// One-line JSON text; parse_run_record(to_json_line(r)) == r.
std::string to_json_line(const RunRecord& record);
/// Throws ParseError on malformed input or missing fields.
RunRecord parse_run_record(const std::string& line);

/// One JSON line per phase, tagged with the instance and replication.
std::string phase_json_line(const RunRecord& record, const PhaseEntry& phase);

std::string utc_timestamp();

}  // namespace nwfs::harness
