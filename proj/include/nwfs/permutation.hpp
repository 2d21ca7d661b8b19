#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nwfs/types.hpp"

namespace nwfs {

/// An ordering of the job ids 0..n-1, each exactly once.
class Permutation {
public:
    Permutation() = default;

    /// Throws InputError unless `order` is a bijection on {0, ..., order.size()-1}.
    explicit Permutation(std::vector<JobId> order);

    static Permutation identity(std::size_t n);

    /// True when `order` is a bijection on {0, ..., order.size()-1}.
    static bool is_valid(std::span<const JobId> order);

    std::size_t size() const noexcept { return order_.size(); }
    bool empty() const noexcept { return order_.empty(); }
    JobId operator[](std::size_t pos) const { return order_[pos]; }

    std::span<const JobId> jobs() const noexcept { return order_; }
    const std::vector<JobId>& order() const noexcept { return order_; }

    /// Inverse mapping: position_of()[job] is the index of `job`.
    std::vector<std::size_t> position_of() const;

    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<JobId> order_;
};

}  // namespace nwfs
