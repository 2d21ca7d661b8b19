#include "nwfs/harness/taillard.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

namespace nwfs::harness {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

bool is_label(std::string_view line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        return std::isalpha(static_cast<unsigned char>(c));
    }
    return false;
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::int64_t to_int(const Token& tok, std::size_t line) {
    std::int64_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError("expected an integer, found '" + std::string(tok.text) + "'", line, tok.column);
    return value;
}

constexpr std::array<std::int64_t, 120> kSeeds = {
    // 20 x 5
    873654221, 379008056, 1866992158, 216771124, 495070989, 402959317, 1369363414, 2021925980, 573109518, 88325120,
    // 20 x 10
    587595453, 1401007982, 873136276, 268827376, 1634173168, 691823909, 73807235, 1273398721, 2065119309, 1672900551,
    // 20 x 20
    479340445, 268827376, 1958948863, 918272953, 555010963, 2010851491, 1519833303, 1748670931, 1923497586, 1829909967,
    // 50 x 5
    1328042058, 200382020, 496319842, 1203030903, 1730708564, 450926852, 1303135678, 1273398721, 587288402, 248421594,
    // 50 x 10
    1958948863, 575633267, 655816003, 1977864101, 93805469, 1803345551, 49612559, 1899802599, 2013025619, 578962478,
    // 50 x 20
    1539989115, 691823909, 655816003, 1315102446, 1949668355, 1923497586, 1805594913, 1861070898, 715643788, 464843328,
    // 100 x 5
    896678084, 1179439976, 1122278347, 416756875, 267829958, 1835213917, 1328833962, 1418570761, 161033112, 304212574,
    // 100 x 10
    1539989115, 655816003, 960914243, 1915696806, 2013025619, 1168140026, 1923497586, 167698528, 1528387973, 993794175,
    // 100 x 20
    450926852, 1462772409, 1021685265, 83696007, 508154254, 1861070898, 26482542, 444956424, 2115448041, 118254244,
    // 200 x 10
    471503978, 1215892992, 135346136, 1602504050, 160037322, 551454346, 519485142, 383947510, 1968171878, 540872513,
    // 200 x 20
    2013025619, 475051709, 914834335, 810642687, 1019331795, 2056065863, 1342855162, 1325809384, 1988803007, 765656702,
    // 500 x 20
    1368624604, 450181436, 1927888393, 1759567256, 606425239, 19268348, 1298201670, 2041736264, 379756761, 28837162,
};

constexpr std::array<std::pair<std::size_t, std::size_t>, 12> kSizes = {{
    {20, 5}, {20, 10}, {20, 20}, {50, 5}, {50, 10}, {50, 20},
    {100, 5}, {100, 10}, {100, 20}, {200, 10}, {200, 20}, {500, 20},
}};

}  // namespace

TaillardFile parse_taillard_file(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }

    std::size_t ln = 0;
    auto skip_blank = [&] {
        while (ln < lines.size() && is_blank(lines[ln]))
            ++ln;
    };

    // Label lines may precede the header.
    skip_blank();
    while (ln < lines.size() && is_label(lines[ln])) {
        ++ln;
        skip_blank();
    }
    if (ln >= lines.size())
        throw ParseError("missing header line", std::max<std::size_t>(lines.size(), 1), 1);

    TaillardFile out;
    const auto header = split(lines[ln]);
    if (header.size() < 2 || header.size() > 5)
        throw ParseError("header must hold 2 to 5 integers, found " + std::to_string(header.size()), ln + 1,
                         header.empty() ? 1 : header.front().column);
    std::vector<std::int64_t> values;
    for (const auto& tok : header)
        values.push_back(to_int(tok, ln + 1));
    if (values[0] < 1)
        throw ParseError("job count must be positive", ln + 1, header[0].column);
    if (values[1] < 1)
        throw ParseError("machine count must be positive", ln + 1, header[1].column);
    out.header.n_jobs = static_cast<std::size_t>(values[0]);
    out.header.n_machines = static_cast<std::size_t>(values[1]);
    if (values.size() > 2)
        out.header.seed = values[2];
    if (values.size() > 3)
        out.header.upper_bound = values[3];
    if (values.size() > 4)
        out.header.lower_bound = values[4];
    ++ln;

    skip_blank();
    if (ln < lines.size() && is_label(lines[ln])) {
        if (lower(lines[ln]).find("processing times") == std::string::npos)
            throw ParseError("unexpected text '" + std::string(lines[ln]) + "'", ln + 1, 1);
        ++ln;
    }

    const std::size_t n = out.header.n_jobs;
    const std::size_t m = out.header.n_machines;
    std::vector<Time> proc(n * m);
    for (std::size_t machine = 0; machine < m; ++machine) {
        skip_blank();
        if (ln >= lines.size())
            throw ParseError("expected " + std::to_string(m) + " machine rows, found " + std::to_string(machine),
                             ln, 1);
        const auto row = split(lines[ln]);
        if (row.size() != n)
            throw ParseError("machine row " + std::to_string(machine + 1) + " has " + std::to_string(row.size()) +
                                 " values, expected " + std::to_string(n),
                             ln + 1, row.empty() ? 1 : row.back().column);
        for (std::size_t job = 0; job < n; ++job) {
            const std::int64_t v = to_int(row[job], ln + 1);
            if (v < 1)
                throw ParseError("processing time must be at least 1", ln + 1, row[job].column);
            proc[job * m + machine] = v;
        }
        ++ln;
    }
    skip_blank();
    if (ln < lines.size())
        throw ParseError("unexpected content after " + std::to_string(m) + " machine rows", ln + 1, 1);

    out.instance = Instance(n, m, std::move(proc));
    return out;
}

Instance parse_taillard(std::string_view text) { return parse_taillard_file(text).instance; }

std::string format_taillard(const Instance& inst, const TaillardHeader& header) {
    std::ostringstream os;
    os << "number of jobs, number of machines, initial seed, upper bound and lower bound :\n";
    os << inst.n_jobs() << ' ' << inst.n_machines();
    if (header.seed) {
        os << ' ' << *header.seed;
        if (header.upper_bound) {
            os << ' ' << *header.upper_bound;
            if (header.lower_bound)
                os << ' ' << *header.lower_bound;
        }
    }
    os << "\nprocessing times :\n";
    for (std::size_t machine = 0; machine < inst.n_machines(); ++machine) {
        for (std::size_t job = 0; job < inst.n_jobs(); ++job)
            os << (job ? " " : "") << inst.proc(job, machine);
        os << '\n';
    }
    return os.str();
}

Instance generate_instance(std::size_t n_jobs, std::size_t n_machines, std::int64_t seed) {
    constexpr std::int64_t modulus = 2147483647;
    constexpr std::int64_t multiplier = 16807;
    constexpr std::int64_t q = 127773;  // modulus / multiplier
    constexpr std::int64_t r = 2836;    // modulus % multiplier
    if (seed == 0)
        throw InputError("generator seed must be non-zero");
    if (seed < 0 || seed >= modulus)
        throw InputError("generator seed must lie in [1, 2^31 - 2]");
    if (n_jobs < 1 || n_machines < 1)
        throw InputError("instance needs at least one job and one machine");

    auto unif = [&seed](std::int64_t low, std::int64_t high) {
        const std::int64_t k = seed / q;
        seed = multiplier * (seed % q) - k * r;
        if (seed < 0)
            seed += modulus;
        const double value = static_cast<double>(seed) / static_cast<double>(modulus);
        return low + static_cast<std::int64_t>(value * static_cast<double>(high - low + 1));
    };

    std::vector<Time> proc(n_jobs * n_machines);
    for (std::size_t machine = 0; machine < n_machines; ++machine)
        for (std::size_t job = 0; job < n_jobs; ++job)
            proc[job * n_machines + machine] = unif(1, 99);
    return Instance(n_jobs, n_machines, std::move(proc));
}

std::optional<std::string> normalize_name(std::string_view name) {
    if (name.size() < 3)
        return std::nullopt;
    if (std::tolower(static_cast<unsigned char>(name[0])) != 't' ||
        std::tolower(static_cast<unsigned char>(name[1])) != 'a')
        return std::nullopt;
    int number = 0;
    auto digits = name.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), number);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || number < 1 || number > 120)
        return std::nullopt;
    char buf[8];
    std::snprintf(buf, sizeof buf, "ta%03d", number);
    return std::string(buf);
}

std::optional<CatalogEntry> catalog_entry(std::string_view name) {
    const auto norm = normalize_name(name);
    if (!norm)
        return std::nullopt;
    const int index = std::stoi(norm->substr(2)) - 1;
    const auto [n, m] = kSizes[static_cast<std::size_t>(index / 10)];
    return CatalogEntry{*norm, n, m, kSeeds[static_cast<std::size_t>(index)]};
}

}  // namespace nwfs::harness
