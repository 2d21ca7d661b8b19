#include <algorithm>

#include "nwfs/kernels.hpp"

namespace nwfs::kernels::scalar {

void delay_row(std::span<const Time> rest, const Time* head, std::size_t n, Time first, Time* out) {
    for (std::size_t k = 0; k < n; ++k) {
        Time best = 0;
        for (std::size_t r = 0; r < rest.size(); ++r)
            best = std::max(best, rest[r] - head[r * n + k]);
        out[k] = first + best;
    }
}

Time path_sum(const Time* delays, std::size_t n, std::span<const JobId> seq) {
    Time sum = 0;
    for (std::size_t k = 1; k < seq.size(); ++k)
        sum += delays[static_cast<std::size_t>(seq[k - 1]) * n + seq[k]];
    return sum;
}

InsertionScan insertion_scan(const Time* delays, std::size_t n, const Time* tail,
                             std::span<const JobId> seq, JobId job) {
    const std::size_t len = seq.size();
    if (len == 0)
        return {0, tail[job]};
    const Time* to_job = delays + job;                          // to_job[a * n] = d[a][job]
    const Time* from_job = delays + static_cast<std::size_t>(job) * n;  // from_job[b] = d[job][b]

    InsertionScan best{0, from_job[seq[0]]};
    for (std::size_t p = 1; p < len; ++p) {
        const std::size_t prev = static_cast<std::size_t>(seq[p - 1]);
        const JobId next = seq[p];
        const Time delta = to_job[prev * n] + from_job[next] - delays[prev * n + next];
        if (delta < best.delta)
            best = {p, delta};
    }
    const JobId last = seq[len - 1];
    const Time at_end = to_job[static_cast<std::size_t>(last) * n] + tail[job] - tail[last];
    if (at_end < best.delta)
        best = {len, at_end};
    return best;
}

}  // namespace nwfs::kernels::scalar
