#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "nwfs/types.hpp"

namespace nwfs::harness {

struct BestKnownEntry {
    Time best = 0;
    std::optional<Time> prior;
    std::optional<Time> igsj_coarse;
    std::optional<Time> igsj_fine;
};

/// Read-only map instance name -> best-known makespan.
class BestKnownRegistry {
public:
    BestKnownRegistry() = default;

    /// Parses the CSV layout of data/best_known.csv. Throws ParseError.
    static BestKnownRegistry parse(std::string_view csv);
    /// Throws std::runtime_error if the file cannot be read.
    static BestKnownRegistry load(const std::filesystem::path& path);
    /// $NWFS_DATA/best_known.csv, falling back to the data directory of the source tree.
    static BestKnownRegistry load_default();

    std::optional<Time> best(std::string_view name) const;
    const BestKnownEntry* entry(std::string_view name) const;
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::map<std::string, BestKnownEntry, std::less<>> entries_;
};

/// Directory holding instances and the registry: $NWFS_DATA or the built-in default.
std::filesystem::path data_dir();

/// Relative percentage deviation 100 * (cmax - best) / best. Throws InputError if best <= 0.
double rpd(Time cmax, Time best);

}  // namespace nwfs::harness
