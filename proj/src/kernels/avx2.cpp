// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "nwfs/kernels.hpp"

namespace nwfs::kernels::avx2 {

namespace {

inline __m256i max_epi64(__m256i a, __m256i b) {
    return _mm256_blendv_epi8(b, a, _mm256_cmpgt_epi64(a, b));
}

inline Time hsum_epi64(__m256i v) {
    alignas(32) Time lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

void delay_row(std::span<const Time> rest, const Time* head, std::size_t n, Time first, Time* out) {
    const std::size_t m = rest.size();
    const __m256i base = _mm256_set1_epi64x(first);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256i best = _mm256_setzero_si256();
        for (std::size_t r = 0; r < m; ++r) {
            const __m256i h = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(head + r * n + k));
            best = max_epi64(best, _mm256_sub_epi64(_mm256_set1_epi64x(rest[r]), h));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), _mm256_add_epi64(base, best));
    }
    for (; k < n; ++k) {
        Time best = 0;
        for (std::size_t r = 0; r < m; ++r)
            best = std::max(best, rest[r] - head[r * n + k]);
        out[k] = first + best;
    }
}

// Gathers use 32-bit indices (a * n + b); sizes beyond that fall back to scalar.
static bool index_fits(std::size_t n) {
    return n <= 46340;  // 46340^2 < 2^31
}

Time path_sum(const Time* delays, std::size_t n, std::span<const JobId> seq) {
    if (!index_fits(n) || seq.size() < 2)
        return scalar::path_sum(delays, n, seq);
    const __m128i stride = _mm_set1_epi32(static_cast<int>(n));
    const long long* base = reinterpret_cast<const long long*>(delays);
    __m256i acc = _mm256_setzero_si256();
    std::size_t k = 1;
    for (; k + 4 <= seq.size(); k += 4) {
        const __m128i from = _mm_loadu_si128(reinterpret_cast<const __m128i*>(seq.data() + k - 1));
        const __m128i to = _mm_loadu_si128(reinterpret_cast<const __m128i*>(seq.data() + k));
        const __m128i idx = _mm_add_epi32(_mm_mullo_epi32(from, stride), to);
        acc = _mm256_add_epi64(acc, _mm256_i32gather_epi64(base, idx, 8));
    }
    Time sum = hsum_epi64(acc);
    for (; k < seq.size(); ++k)
        sum += delays[static_cast<std::size_t>(seq[k - 1]) * n + seq[k]];
    return sum;
}

InsertionScan insertion_scan(const Time* delays, std::size_t n, const Time* tail,
                             std::span<const JobId> seq, JobId job) {
    const std::size_t len = seq.size();
    if (len < 6 || !index_fits(n))
        return scalar::insertion_scan(delays, n, tail, seq, job);

    const Time* from_job = delays + static_cast<std::size_t>(job) * n;
    const long long* base = reinterpret_cast<const long long*>(delays);
    const __m128i stride = _mm_set1_epi32(static_cast<int>(n));
    const __m128i job_v = _mm_set1_epi32(job);
    const __m128i job_row = _mm_set1_epi32(job * static_cast<int>(n));

    // Per-lane running minimum over interior positions p = 1..len-1. Strict compare
    // keeps the earliest position within a lane.
    __m256i best_val = _mm256_set1_epi64x(std::numeric_limits<Time>::max());
    __m256i best_pos = _mm256_setzero_si256();
    __m256i pos = _mm256_setr_epi64x(1, 2, 3, 4);
    const __m256i four = _mm256_set1_epi64x(4);

    std::size_t p = 1;
    for (; p + 4 <= len; p += 4) {
        const __m128i prev = _mm_loadu_si128(reinterpret_cast<const __m128i*>(seq.data() + p - 1));
        const __m128i next = _mm_loadu_si128(reinterpret_cast<const __m128i*>(seq.data() + p));
        const __m128i prev_row = _mm_mullo_epi32(prev, stride);
        const __m256i in = _mm256_i32gather_epi64(base, _mm_add_epi32(prev_row, job_v), 8);
        const __m256i out = _mm256_i32gather_epi64(base, _mm_add_epi32(job_row, next), 8);
        const __m256i broken = _mm256_i32gather_epi64(base, _mm_add_epi32(prev_row, next), 8);
        const __m256i delta = _mm256_sub_epi64(_mm256_add_epi64(in, out), broken);
        const __m256i better = _mm256_cmpgt_epi64(best_val, delta);
        best_val = _mm256_blendv_epi8(best_val, delta, better);
        best_pos = _mm256_blendv_epi8(best_pos, pos, better);
        pos = _mm256_add_epi64(pos, four);
    }

    alignas(32) Time vals[4];
    alignas(32) Time poss[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(vals), best_val);
    _mm256_store_si256(reinterpret_cast<__m256i*>(poss), best_pos);

    InsertionScan best{0, from_job[seq[0]]};
    auto consider = [&best](std::size_t at, Time delta) {
        if (delta < best.delta || (delta == best.delta && at < best.position))
            best = {at, delta};
    };
    for (int lane = 0; lane < 4; ++lane) {
        if (vals[lane] != std::numeric_limits<Time>::max())
            consider(static_cast<std::size_t>(poss[lane]), vals[lane]);
    }
    for (; p < len; ++p) {
        const std::size_t prev = static_cast<std::size_t>(seq[p - 1]);
        consider(p, delays[prev * n + job] + from_job[seq[p]] - delays[prev * n + seq[p]]);
    }
    const JobId last = seq[len - 1];
    consider(len, delays[static_cast<std::size_t>(last) * n + job] + tail[job] - tail[last]);
    return best;
}

}  // namespace nwfs::kernels::avx2
