#include <atomic>
#include <cstdlib>
#include <string>

#include "nwfs/kernels.hpp"

namespace nwfs::kernels {

namespace {

struct Table {
    decltype(&scalar::delay_row) delay_row;
    decltype(&scalar::path_sum) path_sum;
    decltype(&scalar::insertion_scan) insertion_scan;
};

constexpr Table kScalar{&scalar::delay_row, &scalar::path_sum, &scalar::insertion_scan};
#if defined(NWFS_HAVE_AVX2)
constexpr Table kAvx2{&avx2::delay_row, &avx2::path_sum, &avx2::insertion_scan};
#endif

bool cpu_has_avx2() noexcept {
#if defined(NWFS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Table* table_for(Backend b) noexcept {
#if defined(NWFS_HAVE_AVX2)
    if (b == Backend::avx2)
        return &kAvx2;
#endif
    (void)b;
    return &kScalar;
}

Backend initial_backend() noexcept {
    if (const char* env = std::getenv("NWFS_KERNELS")) {
        if (auto b = parse_backend(env); b && backend_available(*b))
            return *b;
    }
    return best_available();
}

std::atomic<Backend>& current() noexcept {
    static std::atomic<Backend> backend{initial_backend()};
    return backend;
}

}  // namespace

bool backend_available(Backend b) noexcept {
    return b == Backend::scalar || (b == Backend::avx2 && cpu_has_avx2());
}

Backend best_available() noexcept { return cpu_has_avx2() ? Backend::avx2 : Backend::scalar; }

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_available(b))
        throw InputError("kernel backend '" + std::string(to_string(b)) + "' is not available here");
    current().store(b, std::memory_order_relaxed);
}

std::string_view to_string(Backend b) noexcept {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "?";
}

std::optional<Backend> parse_backend(std::string_view name) noexcept {
    if (name == "scalar")
        return Backend::scalar;
    if (name == "avx2")
        return Backend::avx2;
    return std::nullopt;
}

void delay_row(std::span<const Time> rest, const Time* head, std::size_t n, Time first, Time* out) {
    table_for(active_backend())->delay_row(rest, head, n, first, out);
}

Time path_sum(const Time* delays, std::size_t n, std::span<const JobId> seq) {
    return table_for(active_backend())->path_sum(delays, n, seq);
}

InsertionScan insertion_scan(const Time* delays, std::size_t n, const Time* tail,
                             std::span<const JobId> seq, JobId job) {
    return table_for(active_backend())->insertion_scan(delays, n, tail, seq, job);
}

}  // namespace nwfs::kernels
