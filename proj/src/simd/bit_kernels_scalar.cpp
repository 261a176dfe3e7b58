#include "mmph/simd/bit_kernels.hpp"

#include <bit>

namespace mmph::simd {

namespace {

void and_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void or_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

std::size_t popcount(const Word* a, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
    return c;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

bool intersects(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

constexpr BitKernels kScalar{Isa::Scalar, and_into, andnot_into, or_into, popcount, and_popcount, intersects, is_subset};

} // namespace

const BitKernels& scalar_kernels() noexcept { return kScalar; }

const char* isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    }
    return "?";
}

} // namespace mmph::simd
