#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "nwfs/instance.hpp"
#include "nwfs/permutation.hpp"
#include "nwfs/rng.hpp"
#include "nwfs/superjobs.hpp"

namespace nwfs::fixtures {

inline Instance random_instance(Rng& rng, std::size_t n, std::size_t m, Time lo = 1, Time hi = 99) {
    std::uniform_int_distribution<Time> dist(lo, hi);
    std::vector<Time> proc(n * m);
    for (auto& p : proc)
        p = dist(rng);
    return Instance(n, m, std::move(proc));
}

inline Permutation random_permutation(Rng& rng, std::size_t n) {
    std::vector<JobId> order(n);
    std::iota(order.begin(), order.end(), JobId{0});
    std::shuffle(order.begin(), order.end(), rng);
    return Permutation(std::move(order));
}

/// Random contiguous cut of a random order into blocks.
inline SuperJobSet random_partition(Rng& rng, std::size_t n) {
    const Permutation p = random_permutation(rng, n);
    std::vector<SuperJob> blocks;
    std::bernoulli_distribution cut(0.45);
    SuperJob current;
    for (std::size_t i = 0; i < n; ++i) {
        current.push_back(p[i]);
        if (i + 1 == n || cut(rng)) {
            blocks.push_back(std::move(current));
            current.clear();
        }
    }
    return SuperJobSet(std::move(blocks), n);
}

/// Eleven 12-job solutions sharing the adjacent pairs (11,2) and (0,4) everywhere and
/// (9,1) in ten of them.
inline Pool figure_pool() {
    const std::vector<std::vector<JobId>> rows = {
        {8, 3, 7, 5, 10, 9, 1, 0, 4, 6, 11, 2}, {8, 3, 7, 11, 2, 5, 10, 9, 1, 0, 4, 6},
        {8, 10, 9, 1, 0, 4, 7, 5, 3, 11, 2, 6}, {8, 3, 5, 10, 6, 0, 4, 7, 11, 2, 9, 1},
        {8, 3, 5, 10, 6, 0, 4, 7, 9, 1, 11, 2}, {8, 10, 6, 0, 4, 7, 5, 3, 9, 1, 11, 2},
        {8, 3, 7, 11, 2, 5, 10, 9, 6, 0, 4, 1}, {8, 3, 5, 10, 9, 1, 11, 2, 7, 6, 0, 4},
        {8, 10, 6, 0, 4, 7, 5, 3, 11, 2, 9, 1}, {8, 10, 9, 1, 0, 4, 7, 3, 5, 6, 11, 2},
        {8, 3, 7, 10, 9, 1, 11, 2, 5, 6, 0, 4},
    };
    std::vector<Permutation> sols;
    for (const auto& r : rows)
        sols.emplace_back(r);
    return Pool(std::move(sols), "file");
}

}  // namespace nwfs::fixtures
