#include "nwfs/permutation.hpp"

#include <numeric>
#include <sstream>

namespace nwfs {

Permutation::Permutation(std::vector<JobId> order) : order_(std::move(order)) {
    if (!is_valid(order_))
        throw InputError("sequence is not a permutation of 0.." + std::to_string(order_.size()) + "-1");
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<JobId> order(n);
    std::iota(order.begin(), order.end(), JobId{0});
    return Permutation(std::move(order));
}

bool Permutation::is_valid(std::span<const JobId> order) {
    std::vector<bool> seen(order.size(), false);
    for (JobId j : order) {
        if (j < 0 || static_cast<std::size_t>(j) >= order.size() || seen[j])
            return false;
        seen[j] = true;
    }
    return true;
}

std::vector<std::size_t> Permutation::position_of() const {
    std::vector<std::size_t> pos(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k)
        pos[order_[k]] = k;
    return pos;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < order_.size(); ++k)
        os << (k ? " " : "") << order_[k];
    return os.str();
}

}  // namespace nwfs
