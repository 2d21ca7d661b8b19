#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "nwfs/instance.hpp"

namespace nwfs::harness {

/// Header integers of a benchmark file: "n m [seed [ub [lb]]]".
struct TaillardHeader {
    std::size_t n_jobs = 0;
    std::size_t n_machines = 0;
    std::optional<std::int64_t> seed;
    std::optional<std::int64_t> upper_bound;
    std::optional<std::int64_t> lower_bound;
};

struct TaillardFile {
    TaillardHeader header;
    Instance instance;
};

/// Parses the benchmark text layout: optional label lines, a header line of 2-5 integers,
/// an optional "processing times" line, then n_machines rows of n_jobs integers
/// (machine-major; transposed into the job-major Instance). Throws ParseError.
TaillardFile parse_taillard_file(std::string_view text);
Instance parse_taillard(std::string_view text);

/// Writes the same layout back out.
std::string format_taillard(const Instance& inst, const TaillardHeader& header);

/// Uniform U[1,99] instance from the benchmark's portable generator (Lehmer/Park-Miller,
/// a = 16807, m = 2^31 - 1, Schrage split), drawn machine by machine.
/// Throws InputError on seed 0 or a seed outside [1, 2^31 - 2].
Instance generate_instance(std::size_t n_jobs, std::size_t n_machines, std::int64_t seed);

struct CatalogEntry {
    std::string name;  ///< "ta001" ... "ta120"
    std::size_t n_jobs;
    std::size_t n_machines;
    std::int64_t seed;
};

/// Normalises "ta1", "Ta01", "TA001" to "ta001"; nullopt if not a benchmark name.
std::optional<std::string> normalize_name(std::string_view name);

/// The 120 benchmark instances with their published time seeds.
std::optional<CatalogEntry> catalog_entry(std::string_view name);

}  // namespace nwfs::harness
