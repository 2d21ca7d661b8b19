#include "nwfs/harness/registry.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "nwfs/harness/taillard.hpp"

#ifndef NWFS_DATA_DIR
#define NWFS_DATA_DIR "data"
#endif

namespace nwfs::harness {

namespace {

std::optional<Time> field(const std::string& cell, std::size_t line, std::size_t column) {
    if (cell.empty())
        return std::nullopt;
    Time v = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size())
        throw ParseError("bad makespan '" + cell + "'", line, column);
    if (v <= 0)
        throw ParseError("makespan must be positive", line, column);
    return v;
}

}  // namespace

BestKnownRegistry BestKnownRegistry::parse(std::string_view csv) {
    BestKnownRegistry reg;
    std::istringstream in{std::string(csv)};
    std::string line;
    std::size_t ln = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++ln;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (!header_seen) {
            header_seen = true;
            if (!cells.empty() && cells[0] == "name")
                continue;
        }
        if (cells.size() < 2)
            throw ParseError("expected at least name,best", ln, 1);
        const auto name = normalize_name(cells[0]).value_or(cells[0]);
        BestKnownEntry e;
        auto best = field(cells[1], ln, 2);
        if (!best)
            throw ParseError("missing best value", ln, 2);
        e.best = *best;
        if (cells.size() > 2)
            e.prior = field(cells[2], ln, 3);
        if (cells.size() > 3)
            e.igsj_coarse = field(cells[3], ln, 4);
        if (cells.size() > 4)
            e.igsj_fine = field(cells[4], ln, 5);
        reg.entries_[name] = e;
    }
    return reg;
}

BestKnownRegistry BestKnownRegistry::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read best-known registry " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

BestKnownRegistry BestKnownRegistry::load_default() { return load(data_dir() / "best_known.csv"); }

std::optional<Time> BestKnownRegistry::best(std::string_view name) const {
    const auto* e = entry(name);
    return e ? std::optional<Time>(e->best) : std::nullopt;
}

const BestKnownEntry* BestKnownRegistry::entry(std::string_view name) const {
    const auto norm = normalize_name(name);
    auto it = entries_.find(norm ? std::string_view(*norm) : name);
    return it == entries_.end() ? nullptr : &it->second;
}

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("NWFS_DATA"); env && *env)
        return env;
    return NWFS_DATA_DIR;
}

double rpd(Time cmax, Time best) {
    if (best <= 0)
        throw InputError("best-known makespan must be positive");
    return static_cast<double>(cmax - best) / static_cast<double>(best) * 100.0;
}

}  // namespace nwfs::harness
