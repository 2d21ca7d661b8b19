#pragma once

// Data-parallel inner loops of the evaluation code. Each kernel has a portable
// scalar reference and, on x86-64, an AVX2 variant. The active backend is picked
// once at startup from CPU features and can be overridden (tests, --kernels flag,
// NWFS_KERNELS=scalar|avx2 in the environment).

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "nwfs/types.hpp"

namespace nwfs::kernels {

enum class Backend { scalar, avx2 };

struct InsertionScan {
    std::size_t position = 0;  ///< insertion index into the scanned sequence (0..L)
    Time delta = 0;            ///< cost change of inserting there
};

// -- dispatched entry points ------------------------------------------------

/// out[k] = first + max_r (rest[r] - head[r * n + k]) for k in [0, n).
/// `rest` has m entries with rest[0] == 0; `head` is m x n, machine-major, head[0 * n + k] == 0.
void delay_row(std::span<const Time> rest, const Time* head, std::size_t n, Time first, Time* out);

/// Sum of delays[seq[k-1] * n + seq[k]] over consecutive pairs.
Time path_sum(const Time* delays, std::size_t n, std::span<const JobId> seq);

/// Cheapest place to insert `job` into `seq` under the delay/tail cost model.
/// Ties resolve to the smallest position. An empty `seq` yields {0, tail[job]}.
InsertionScan insertion_scan(const Time* delays, std::size_t n, const Time* tail,
                             std::span<const JobId> seq, JobId job);

// -- backend control ----------------------------------------------------------

Backend active_backend() noexcept;
bool backend_available(Backend b) noexcept;
/// Throws InputError if `b` is not available on this CPU/build.
void set_backend(Backend b);
Backend best_available() noexcept;
std::string_view to_string(Backend b) noexcept;
std::optional<Backend> parse_backend(std::string_view name) noexcept;

// -- direct access for equivalence tests ---------------------------------------

namespace scalar {
void delay_row(std::span<const Time> rest, const Time* head, std::size_t n, Time first, Time* out);
Time path_sum(const Time* delays, std::size_t n, std::span<const JobId> seq);
InsertionScan insertion_scan(const Time* delays, std::size_t n, const Time* tail,
                             std::span<const JobId> seq, JobId job);
}  // namespace scalar

#if defined(NWFS_HAVE_AVX2)
namespace avx2 {
void delay_row(std::span<const Time> rest, const Time* head, std::size_t n, Time first, Time* out);
Time path_sum(const Time* delays, std::size_t n, std::span<const JobId> seq);
InsertionScan insertion_scan(const Time* delays, std::size_t n, const Time* tail,
                             std::span<const JobId> seq, JobId job);
}  // namespace avx2
#endif

}  // namespace nwfs::kernels
