#pragma once

#include <cstdint>
#include <random>

namespace nwfs {

using Rng = std::mt19937_64;

/// Derives an independent stream seed for slot `slot` of a run seeded with `base`.
/// Used so concurrent workers get seeds that do not depend on execution order.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t slot) noexcept {
    // splitmix64 finalizer over the combined key
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (slot + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace nwfs
