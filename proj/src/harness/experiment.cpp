#include "nwfs/harness/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "nwfs/harness/taillard.hpp"
#include "nwfs/parallel.hpp"
#include "nwfs/rng.hpp"

namespace nwfs::harness {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t).count();
}

IgConfig base_ig(const Instance& inst, const SolverSettings& s) {
    IgConfig cfg;
    cfg.destruction_size = s.destruction_size;
    cfg.temperature = default_temperature(inst, s.tau);
    cfg.acceptance = s.acceptance;
    return cfg;
}

IgsjConfig inner_config(const Instance& inst, const SolverSettings& s) {
    IgsjConfig cfg;
    cfg.schedule = s.schedule;
    cfg.ig = base_ig(inst, s);
    cfg.budget = s.phase_budget;
    return cfg;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in)
        throw std::runtime_error("cannot read " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void append_line(const std::filesystem::path& p, const std::string& line, const std::string& header = {}) {
    const bool fresh = !std::filesystem::exists(p) || std::filesystem::file_size(p) == 0;
    std::ofstream out(p, std::ios::app);
    if (!out)
        throw std::runtime_error("cannot append to " + p.string());
    if (fresh && !header.empty())
        out << header << '\n';
    out << line << '\n';
    out.flush();
    if (!out)
        throw std::runtime_error("write failed on " + p.string());
}

std::string size_label(const RunRecord& r) {
    return std::to_string(r.n_jobs) + "x" + std::to_string(r.n_machines);
}

std::string phase_key(const PhaseEntry& p) { return p.sigma.empty() ? p.label : p.label + "@" + p.sigma; }

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

std::string to_string(Algorithm algo) {
    switch (algo) {
    case Algorithm::ig:
        return "ig";
    case Algorithm::igsj:
        return "igsj";
    case Algorithm::iigsj:
        return "iigsj";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "ig")
        return Algorithm::ig;
    if (name == "igsj")
        return Algorithm::igsj;
    if (name == "iigsj")
        return Algorithm::iigsj;
    throw InputError("unknown algorithm '" + name + "' (expected ig, igsj or iigsj)");
}

SolverSettings SolverSettings::defaults(Algorithm algo) {
    SolverSettings s;
    s.algorithm = algo;
    if (algo == Algorithm::iigsj) {
        s.schedule = ConfidenceSchedule::fine();
        s.phase_budget = PhaseBudget{1.0, 25.0};
    }
    return s;
}

std::string SolverSettings::to_json() const {
    nlohmann::json j = {{"algorithm", harness::to_string(algorithm)},
                        {"destruction_size", destruction_size},
                        {"tau", tau},
                        {"acceptance", acceptance == Acceptance::incumbent ? "incumbent" : "best-ever"},
                        {"time_factor", time_factor},
                        {"max_time_ms", max_time_ms ? nlohmann::json(*max_time_ms) : nlohmann::json()},
                        {"max_no_improve", max_no_improve ? nlohmann::json(*max_no_improve) : nlohmann::json()}};
    if (algorithm != Algorithm::ig) {
        j["sigma"] = schedule.to_string();
        j["phase_time_factor"] = phase_budget.time_factor;
        j["noimprove_factor"] = phase_budget.noimprove_factor;
    }
    if (algorithm == Algorithm::igsj)
        j["pool_size"] = pool_size;
    if (algorithm == Algorithm::iigsj) {
        j["iterations"] = iterations;
        j["R"] = pool_width;
        j["rho"] = sample_size;
    }
    return j.dump();
}

NamedInstance resolve_instance(const std::string& spec) {
    const std::filesystem::path p(spec);
    std::error_code ec;
    if (std::filesystem::is_regular_file(p, ec))
        return {p.stem().string(), parse_taillard(read_file(p))};
    const auto name = normalize_name(spec);
    if (!name)
        throw InputError("'" + spec + "' is neither a readable file nor a benchmark name");
    const auto file = data_dir() / "instances" / (*name + ".txt");
    if (std::filesystem::is_regular_file(file, ec))
        return {*name, parse_taillard(read_file(file))};
    const auto entry = catalog_entry(*name);
    if (!entry)
        throw InputError("no instance named " + *name);
    return {*name, generate_instance(entry->n_jobs, entry->n_machines, entry->seed)};
}

Pool build_pool(const Instance& inst, const DelayMatrix& dm, const SolverSettings& s, std::uint64_t seed) {
    const std::size_t count = s.algorithm == Algorithm::iigsj ? s.pool_width : s.pool_size;
    PoolBudget budget{s.max_time_ms.value_or(pool_time_ms(dm.size(), s.time_factor)), s.max_no_improve};
    return generate_pool(dm, count, budget, base_ig(inst, s), seed, s.threads);
}

RunRecord solve_instance(const NamedInstance& inst, const SolverSettings& s, std::uint64_t seed,
                         const BestKnownRegistry* registry, const Pool* shared_pool) {
    const auto started = Clock::now();
    const DelayMatrix dm(inst.instance);
    RunRecord rec;
    rec.instance = inst.name;
    rec.n_jobs = inst.instance.n_jobs();
    rec.n_machines = inst.instance.n_machines();
    rec.algorithm = to_string(s.algorithm);
    rec.config = s.to_json();
    rec.seed = seed;
    rec.timestamp = utc_timestamp();

    Permutation best;
    if (s.algorithm == Algorithm::ig) {
        IgConfig cfg = base_ig(inst.instance, s);
        const auto budget = s.max_time_ms.value_or(pool_time_ms(dm.size(), s.time_factor));
        if (budget > 0)
            cfg.max_time_ms = budget;
        cfg.max_no_improve = s.max_no_improve;
        cfg.seed = seed;
        const IgResult r = iterated_greedy(dm, neh_start(dm), cfg);
        best = r.best;
        rec.trace.push_back({"ig", "", dm.size(), r.best_makespan, r.elapsed_ms, r.iterations});
    } else {
        Pool pool;
        if (shared_pool) {
            pool = *shared_pool;
        } else {
            const auto t = Clock::now();
            pool = build_pool(inst.instance, dm, s, derive_seed(seed, 0));
            Time pool_best = 0;
            for (const auto& p : pool.solutions()) {
                const Time c = makespan(dm, p).makespan;
                pool_best = pool_best == 0 ? c : std::min(pool_best, c);
            }
            rec.trace.push_back({"pool", "", dm.size(), pool_best, ms_since(t), 0});
        }
        IgsjConfig inner = inner_config(inst.instance, s);
        if (s.algorithm == Algorithm::igsj) {
            inner.seed = derive_seed(seed, 1);
            const IgsjResult r = igsj(dm, pool, inner);
            best = r.best;
            for (const auto& ph : r.trace)
                rec.trace.push_back({ph.label, ph.sigma.to_string(), ph.n_sj, ph.makespan, ph.elapsed_ms,
                                     ph.iterations});
        } else {
            IigsjConfig cfg;
            cfg.iterations = s.iterations;
            cfg.pool_width = s.pool_width;
            cfg.sample_size = s.sample_size;
            cfg.inner = inner;
            cfg.seed = derive_seed(seed, 1);
            cfg.threads = s.threads;
            const IigsjResult r = iigsj(dm, pool, cfg);
            best = r.best;
            for (const auto& it : r.iterations)
                rec.trace.push_back({"iter", "", dm.size(), it.best_makespan, it.elapsed_ms,
                                     static_cast<std::int64_t>(it.iteration)});
        }
    }
    rec.makespan = makespan(dm, best).makespan;
    rec.permutation.assign(best.jobs().begin(), best.jobs().end());
    if (registry) {
        if (auto b = registry->best(inst.name)) {
            rec.best_known = *b;
            rec.rpd = rpd(rec.makespan, *b);
        }
    }
    rec.wall_ms = ms_since(started);
    return rec;
}

std::uint64_t replication_seed(std::uint64_t base_seed, const std::string& name, std::size_t rep) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return derive_seed(base_seed ^ h, rep);
}

std::vector<std::string> expand_instance_list(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const auto dash = item.find('-');
        if (dash != std::string::npos) {
            const auto lo = normalize_name(item.substr(0, dash));
            const auto hi = normalize_name(item.substr(dash + 1));
            if (lo && hi) {
                const int a = std::stoi(lo->substr(2));
                const int b = std::stoi(hi->substr(2));
                if (a > b)
                    throw InputError("empty instance range '" + item + "'");
                for (int k = a; k <= b; ++k)
                    out.push_back(*normalize_name("ta" + std::to_string(k)));
                continue;
            }
        }
        out.push_back(normalize_name(item).value_or(item));
    }
    return out;
}

std::string format_pool(const Pool& pool) {
    std::ostringstream os;
    os << "# pool " << pool.source() << ' ' << pool.size() << ' ' << pool.n_jobs() << '\n';
    for (const auto& p : pool.solutions()) {
        for (std::size_t i = 0; i < p.size(); ++i)
            os << (i ? " " : "") << p[i];
        os << '\n';
    }
    return os.str();
}

Pool parse_pool(std::string_view text, std::string source) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t ln = 0;
    std::vector<Permutation> members;
    while (std::getline(in, line)) {
        ++ln;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        std::vector<JobId> seq;
        std::string tok;
        while (ls >> tok) {
            JobId v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw ParseError("bad job id '" + tok + "'", ln, line.find(tok) + 1);
            seq.push_back(v);
        }
        if (!Permutation::is_valid(seq))
            throw ParseError("line is not a permutation of 0..n-1", ln, 1);
        members.emplace_back(std::move(seq));
    }
    return Pool(std::move(members), std::move(source));
}

void persist_record(const std::filesystem::path& dir, const RunRecord& r) {
    append_line(dir / "runs.jsonl", to_json_line(r));
    append_line(dir / "runs.csv", csv_row(r), csv_header());
}

std::string csv_header() { return "instance,size,algo,replication,makespan,rpd,total_ms,phases"; }

std::string csv_row(const RunRecord& r) {
    std::ostringstream os;
    os << r.instance << ',' << size_label(r) << ',' << r.algorithm << ',' << r.replication << ',' << r.makespan
       << ',' << (r.rpd ? format_double(*r.rpd) : "") << ',' << r.wall_ms << ',';
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        if (i)
            os << ';';
        os << phase_key(r.trace[i]) << '=' << r.trace[i].makespan << '/' << r.trace[i].elapsed_ms << "ms";
    }
    return os.str();
}

std::vector<SizeSummary> summarize(const std::vector<RunRecord>& records) {
    struct Acc {
        SizeSummary s;
        double rpd_sum = 0.0;
        std::size_t rpd_count = 0;
        double makespan_sum = 0.0;
        double ms_sum = 0.0;
        std::vector<std::string> phase_order;
        std::map<std::string, std::pair<double, std::size_t>> phase;
    };
    std::vector<std::string> order;
    std::map<std::string, Acc> by_size;
    for (const auto& r : records) {
        const auto key = size_label(r);
        auto [it, fresh] = by_size.try_emplace(key);
        if (fresh)
            order.push_back(key);
        Acc& a = it->second;
        a.s.size = key;
        ++a.s.runs;
        if (r.error) {
            ++a.s.failures;
            continue;
        }
        if (r.rpd) {
            a.rpd_sum += *r.rpd;
            ++a.rpd_count;
        }
        a.makespan_sum += static_cast<double>(r.makespan);
        a.ms_sum += static_cast<double>(r.wall_ms);
        for (const auto& p : r.trace) {
            const auto k = phase_key(p);
            auto [pit, pfresh] = a.phase.try_emplace(k, 0.0, 0);
            if (pfresh)
                a.phase_order.push_back(k);
            pit->second.first += static_cast<double>(p.elapsed_ms);
            ++pit->second.second;
        }
    }
    std::vector<SizeSummary> out;
    for (const auto& key : order) {
        Acc& a = by_size[key];
        const std::size_t ok = a.s.runs - a.s.failures;
        if (a.rpd_count)
            a.s.mean_rpd = a.rpd_sum / static_cast<double>(a.rpd_count);
        if (ok) {
            a.s.mean_makespan = a.makespan_sum / static_cast<double>(ok);
            a.s.mean_ms = a.ms_sum / static_cast<double>(ok);
        }
        for (const auto& k : a.phase_order) {
            const auto& [sum, count] = a.phase[k];
            a.s.phase_ms.emplace_back(k, sum / static_cast<double>(count));
        }
        out.push_back(std::move(a.s));
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const BestKnownRegistry& registry,
                                const std::function<void(const RunRecord&)>& on_record) {
    ExperimentResult result;
    if (!spec.out_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(spec.out_dir, ec);
        if (ec)
            throw std::runtime_error("cannot create " + spec.out_dir.string() + ": " + ec.message());
    }
    std::mutex writer;
    const auto persist = [&](const RunRecord& r) {
        std::lock_guard lock(writer);
        if (!spec.out_dir.empty()) {
            persist_record(spec.out_dir, r);
        }
        if (on_record)
            on_record(r);
    };

    for (std::size_t idx = 0; idx < spec.instances.size() && spec.replications > 0; ++idx) {
        const std::string& name = spec.instances[idx];
        std::vector<RunRecord> runs(spec.replications);
        std::optional<NamedInstance> inst;
        std::optional<Pool> pool;
        std::string setup_error;
        try {
            inst = resolve_instance(name);
            if (spec.share_pool && spec.settings.algorithm != Algorithm::ig) {
                const DelayMatrix dm(inst->instance);
                pool = build_pool(inst->instance, dm, spec.settings, replication_seed(spec.base_seed, name, 0) ^ 1);
            }
        } catch (const std::exception& e) {
            setup_error = e.what();
        }
        parallel_for(spec.replications, spec.workers, [&](std::size_t rep) {
            const std::uint64_t seed = replication_seed(spec.base_seed, name, rep + 1);
            RunRecord rec;
            if (!setup_error.empty()) {
                rec.instance = name;
                rec.algorithm = to_string(spec.settings.algorithm);
                rec.config = spec.settings.to_json();
                rec.seed = seed;
                rec.timestamp = utc_timestamp();
                rec.error = setup_error;
            } else {
                try {
                    rec = solve_instance(*inst, spec.settings, seed, &registry, pool ? &*pool : nullptr);
                } catch (const std::exception& e) {
                    rec = RunRecord{};
                    rec.instance = inst->name;
                    rec.n_jobs = inst->instance.n_jobs();
                    rec.n_machines = inst->instance.n_machines();
                    rec.algorithm = to_string(spec.settings.algorithm);
                    rec.config = spec.settings.to_json();
                    rec.seed = seed;
                    rec.timestamp = utc_timestamp();
                    rec.error = e.what();
                }
            }
            rec.replication = rep;
            persist(rec);
            runs[rep] = std::move(rec);
        });
        for (auto& r : runs)
            result.records.push_back(std::move(r));
    }

    result.summary = summarize(result.records);
    if (!spec.out_dir.empty()) {
        const auto path = spec.out_dir / "summary.csv";
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot write " + path.string());
        out << "size,runs,failures,mean_rpd,mean_makespan,mean_ms,phase_ms\n";
        for (const auto& s : result.summary) {
            out << s.size << ',' << s.runs << ',' << s.failures << ',' << (s.mean_rpd ? format_double(*s.mean_rpd) : "")
                << ',' << format_double(s.mean_makespan) << ',' << format_double(s.mean_ms) << ',';
            for (std::size_t i = 0; i < s.phase_ms.size(); ++i)
                out << (i ? ";" : "") << s.phase_ms[i].first << '=' << format_double(s.phase_ms[i].second);
            out << '\n';
        }
        if (!out)
            throw std::runtime_error("write failed on " + path.string());
    }
    return result;
}

}  // namespace nwfs::harness
