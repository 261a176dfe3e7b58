// Compiled with -mavx2 on x86-64 only; entry points are reached through the
// dispatcher after a CPUID check.

#include "mmph/simd/bit_kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace mmph::simd {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Nibble-table popcount, summed per 64-bit lane with SAD.
inline __m256i popcount_lanes(__m256i v) {
    const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1,
                                           2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i v) {
    alignas(32) Word lanes[kLanes];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

void and_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    // _mm256_andnot_si256(x, y) = ~x & y
    for (; i + kLanes <= n; i += kLanes) store(dst + i, _mm256_andnot_si256(load(b + i), load(a + i)));
    for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void or_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) store(dst + i, _mm256_or_si256(load(a + i), load(b + i)));
    for (; i < n; ++i) dst[i] = a[i] | b[i];
}

std::size_t popcount(const Word* a, std::size_t n) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLanes <= n; i += kLanes) acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
    std::size_t c = horizontal_sum(acc);
    for (; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
    return c;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLanes <= n; i += kLanes)
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
    std::size_t c = horizontal_sum(acc);
    for (; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

bool intersects(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes)
        if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    // testc(b, a) is 1 iff (~b & a) == 0
    for (; i + kLanes <= n; i += kLanes)
        if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
    for (; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

constexpr BitKernels kAvx2{Isa::Avx2, and_into, andnot_into, or_into, popcount, and_popcount, intersects, is_subset};

} // namespace

const BitKernels* avx2_kernels() noexcept {
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &kAvx2 : nullptr;
}

} // namespace mmph::simd
