#include "nwfs/harness/run_record.hpp"

#include <chrono>
#include <ctime>
#include <json.hpp>

namespace nwfs::harness {

using nlohmann::json;

namespace {

json phase_to_json(const PhaseEntry& p) {
    return {{"label", p.label},           {"sigma", p.sigma},
            {"n_sj", p.n_sj},             {"makespan", p.makespan},
            {"elapsed_ms", p.elapsed_ms}, {"iterations", p.iterations}};
}

PhaseEntry phase_from_json(const json& j) {
    PhaseEntry p;
    j.at("label").get_to(p.label);
    j.at("sigma").get_to(p.sigma);
    j.at("n_sj").get_to(p.n_sj);
    j.at("makespan").get_to(p.makespan);
    j.at("elapsed_ms").get_to(p.elapsed_ms);
    j.at("iterations").get_to(p.iterations);
    return p;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

}  // namespace

std::string to_json_line(const RunRecord& r) {
    json trace = json::array();
    for (const auto& p : r.trace)
        trace.push_back(phase_to_json(p));
    json j = {{"instance", r.instance},
              {"n_jobs", r.n_jobs},
              {"n_machines", r.n_machines},
              {"algorithm", r.algorithm},
              {"config", json::parse(r.config.empty() ? "{}" : r.config)},
              {"seed", r.seed},
              {"replication", r.replication},
              {"makespan", r.makespan},
              {"best_known", optional_json(r.best_known)},
              {"rpd", optional_json(r.rpd)},
              {"permutation", r.permutation},
              {"trace", std::move(trace)},
              {"wall_ms", r.wall_ms},
              {"timestamp", r.timestamp},
              {"error", optional_json(r.error)}};
    return j.dump();
}

RunRecord parse_run_record(const std::string& line) {
    try {
        const json j = json::parse(line);
        RunRecord r;
        j.at("instance").get_to(r.instance);
        j.at("n_jobs").get_to(r.n_jobs);
        j.at("n_machines").get_to(r.n_machines);
        j.at("algorithm").get_to(r.algorithm);
        r.config = j.at("config").dump();
        j.at("seed").get_to(r.seed);
        j.at("replication").get_to(r.replication);
        j.at("makespan").get_to(r.makespan);
        r.best_known = optional_from<Time>(j, "best_known");
        r.rpd = optional_from<double>(j, "rpd");
        j.at("permutation").get_to(r.permutation);
        for (const auto& p : j.at("trace"))
            r.trace.push_back(phase_from_json(p));
        j.at("wall_ms").get_to(r.wall_ms);
        j.at("timestamp").get_to(r.timestamp);
        r.error = optional_from<std::string>(j, "error");
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("run record: ") + e.what(), 1, 1);
    }
}

std::string phase_json_line(const RunRecord& r, const PhaseEntry& p) {
    json j = phase_to_json(p);
    j["instance"] = r.instance;
    j["replication"] = r.replication;
    j["seed"] = r.seed;
    return j.dump();
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace nwfs::harness
