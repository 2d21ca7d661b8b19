#include "nwfs/superjobs.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace nwfs {

Pool::Pool(std::vector<Permutation> solutions, std::string source)
    : solutions_(std::move(solutions)), source_(std::move(source)) {
    if (solutions_.empty())
        throw InputError("a pool needs at least one solution");
    for (const auto& s : solutions_)
        if (s.size() != solutions_.front().size())
            throw InputError("pool solutions cover different job counts");
}

// -- Confidence ---------------------------------------------------------------

Confidence::Confidence(double percent) : percent_(percent), infinite_(false) {
    if (!(percent > 0.0 && percent <= 100.0))
        throw InputError("confidence must lie in (0, 100], got " + std::to_string(percent));
}

Confidence Confidence::parse(const std::string& text) {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
    std::string lower = t;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "inf" || lower == "infinity" || lower == "∞")
        return infinite();
    if (!t.empty() && t.back() == '%')
        t.pop_back();
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(t, &used);
    } catch (const std::exception&) {
        throw InputError("cannot parse confidence level '" + text + "'");
    }
    if (used != t.size())
        throw InputError("cannot parse confidence level '" + text + "'");
    return Confidence(value);
}

std::size_t Confidence::min_count(std::size_t pool_size) const {
    if (infinite_)
        return pool_size + 1;
    // percent * size first: exact for integral percentages, so 60% of 10 is 6, not 6.0000001
    const double need = std::ceil(percent_ * static_cast<double>(pool_size) / 100.0 - 1e-9);
    return std::max<std::size_t>(1, static_cast<std::size_t>(need));
}

std::string Confidence::to_string() const {
    if (infinite_)
        return "inf";
    std::ostringstream os;
    os << percent_;
    return os.str();
}

bool Confidence::operator<(const Confidence& other) const noexcept {
    if (infinite_)
        return false;
    if (other.infinite_)
        return true;
    return percent_ < other.percent_;
}

// -- SuperJobSet --------------------------------------------------------------

SuperJobSet::SuperJobSet(std::vector<SuperJob> blocks, std::size_t n_jobs, Confidence sigma)
    : blocks_(std::move(blocks)), block_of_(n_jobs, n_jobs), offset_(n_jobs, 0), sigma_(sigma) {
    std::size_t covered = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].empty())
            throw InputError("super-job " + std::to_string(b) + " is empty");
        for (std::size_t k = 0; k < blocks_[b].size(); ++k) {
            const JobId j = blocks_[b][k];
            if (j < 0 || static_cast<std::size_t>(j) >= n_jobs)
                throw InputError("super-job contains out-of-range job " + std::to_string(j));
            if (block_of_[j] != n_jobs)
                throw InputError("job " + std::to_string(j) + " appears in two super-jobs");
            block_of_[j] = b;
            offset_[j] = k;
            ++covered;
        }
    }
    if (covered != n_jobs)
        throw InputError("super-jobs do not cover all " + std::to_string(n_jobs) + " jobs");
}

SuperJobSet SuperJobSet::singletons(std::size_t n_jobs) {
    std::vector<SuperJob> blocks(n_jobs);
    for (std::size_t j = 0; j < n_jobs; ++j)
        blocks[j] = {static_cast<JobId>(j)};
    return SuperJobSet(std::move(blocks), n_jobs);
}

std::string SuperJobSet::to_string() const {
    std::ostringstream os;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        os << (b ? " [" : "[");
        for (std::size_t k = 0; k < blocks_[b].size(); ++k)
            os << (k ? " " : "") << blocks_[b][k];
        os << ']';
    }
    return os.str();
}

// -- mining ---------------------------------------------------------------------

PairCounts adjacency_frequency(const Pool& pool) {
    PairCounts counts;
    for (const auto& sol : pool.solutions())
        for (std::size_t k = 1; k < sol.size(); ++k)
            ++counts[{sol[k - 1], sol[k]}];
    return counts;
}

SuperJobSet identify(const Pool& pool, Confidence sigma) {
    const std::size_t n = pool.n_jobs();
    if (sigma.is_infinite())
        return SuperJobSet::singletons(n);

    struct Edge {
        JobId from, to;
        std::size_t count;
    };
    const std::size_t need = sigma.min_count(pool.size());
    std::vector<Edge> edges;
    for (const auto& [pair, count] : adjacency_frequency(pool))
        if (count >= need)
            edges.push_back({pair.first, pair.second, count});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.count != b.count)
            return a.count > b.count;
        if (a.from != b.from)
            return a.from < b.from;
        return a.to < b.to;
    });

    // Greedy in priority order: an edge survives if its tail has no successor yet, its
    // head no predecessor, and it does not close a cycle. Raising sigma only truncates
    // this order, so higher confidence always yields a refinement.
    constexpr JobId none = -1;
    std::vector<JobId> next(n, none), prev(n, none);
    std::vector<std::size_t> root(n);
    std::iota(root.begin(), root.end(), std::size_t{0});
    auto find = [&root](std::size_t x) {
        while (root[x] != x)
            x = root[x] = root[root[x]];
        return x;
    };
    for (const Edge& e : edges) {
        if (next[e.from] != none || prev[e.to] != none)
            continue;
        const auto ra = find(static_cast<std::size_t>(e.from));
        const auto rb = find(static_cast<std::size_t>(e.to));
        if (ra == rb)
            continue;
        root[ra] = rb;
        next[e.from] = e.to;
        prev[e.to] = e.from;
    }

    std::vector<SuperJob> blocks;
    for (std::size_t j = 0; j < n; ++j) {
        if (prev[j] != none)
            continue;
        SuperJob block;
        for (JobId cur = static_cast<JobId>(j); cur != none; cur = next[cur])
            block.push_back(cur);
        blocks.push_back(std::move(block));
    }
    return SuperJobSet(std::move(blocks), n, sigma);
}

// -- reduction ------------------------------------------------------------------

ReducedProblem reduce(const DelayMatrix& dm, const SuperJobSet& sjs) {
    if (sjs.n_jobs() != dm.size())
        throw InputError("super-job set covers " + std::to_string(sjs.n_jobs()) + " jobs, model has " +
                         std::to_string(dm.size()));
    const std::size_t b = sjs.size();
    std::vector<Time> delays(b * b, 0);
    std::vector<Time> tail(b);
    std::vector<Time> internal(b, 0);
    Time internal_sum = dm.offset();
    for (std::size_t s = 0; s < b; ++s) {
        const SuperJob& block = sjs.block(s);
        for (std::size_t k = 1; k < block.size(); ++k)
            internal[s] += dm.delay(block[k - 1], block[k]);
        internal_sum += internal[s];
        tail[s] = dm.tail(block.back());
        for (std::size_t t = 0; t < b; ++t)
            if (t != s)
                delays[s * b + t] = dm.delay(block.back(), sjs.block(t).front());
    }
    ReducedProblem rp;
    rp.blocks = sjs;
    rp.model = DelayMatrix::from_parts(b, std::move(delays), std::move(tail), internal_sum);
    rp.internal = std::move(internal);
    rp.internal_sum = internal_sum;
    return rp;
}

Permutation expand(const SuperJobSet& sjs, std::span<const JobId> meta) {
    if (meta.size() != sjs.size() || !Permutation::is_valid(meta))
        throw InputError("meta-permutation must list each of the " + std::to_string(sjs.size()) +
                         " super-jobs exactly once");
    std::vector<JobId> order;
    order.reserve(sjs.n_jobs());
    for (JobId b : meta)
        order.insert(order.end(), sjs.block(b).begin(), sjs.block(b).end());
    return Permutation(std::move(order));
}

std::vector<JobId> project(const Permutation& perm, const SuperJobSet& sjs) {
    if (perm.size() != sjs.n_jobs())
        throw InputError("permutation and super-job set cover different job counts");
    std::vector<JobId> meta;
    meta.reserve(sjs.size());
    std::size_t pos = 0;
    while (pos < perm.size()) {
        const JobId head = perm[pos];
        const std::size_t b = sjs.block_of(head);
        const SuperJob& block = sjs.block(b);
        if (sjs.offset_in_block(head) != 0 || pos + block.size() > perm.size() ||
            !std::equal(block.begin(), block.end(), perm.jobs().begin() + static_cast<std::ptrdiff_t>(pos)))
            throw ProjectionError("super-job starting with job " + std::to_string(block.front()) +
                                  " is not contiguous at position " + std::to_string(pos));
        meta.push_back(static_cast<JobId>(b));
        pos += block.size();
    }
    return meta;
}

}  // namespace nwfs
