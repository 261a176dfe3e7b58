// Compiled on aarch64 only, where Advanced SIMD is baseline.

#include "mmph/simd/bit_kernels.hpp"

#include <arm_neon.h>

#include <bit>

namespace mmph::simd {

namespace {

constexpr std::size_t kLanes = 2;

void and_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    // vbicq(x, y) = x & ~y
    for (; i + kLanes <= n; i += kLanes) vst1q_u64(dst + i, vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void or_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) dst[i] = a[i] | b[i];
}

inline std::size_t count_bytes(uint8x16_t v) { return vaddvq_u8(vcntq_u8(v)); }

std::size_t popcount(const Word* a, std::size_t n) {
    std::size_t i = 0, c = 0;
    for (; i + kLanes <= n; i += kLanes) c += count_bytes(vreinterpretq_u8_u64(vld1q_u64(a + i)));
    for (; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
    return c;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0, c = 0;
    for (; i + kLanes <= n; i += kLanes)
        c += count_bytes(vreinterpretq_u8_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i))));
    for (; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

bool intersects(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes)
        if (vmaxvq_u32(vreinterpretq_u32_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)))) != 0) return true;
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes)
        if (vmaxvq_u32(vreinterpretq_u32_u64(vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)))) != 0) return false;
    for (; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

constexpr BitKernels kNeon{Isa::Neon, and_into, andnot_into, or_into, popcount, and_popcount, intersects, is_subset};

} // namespace

const BitKernels* neon_kernels() noexcept { return &kNeon; }

} // namespace mmph::simd
