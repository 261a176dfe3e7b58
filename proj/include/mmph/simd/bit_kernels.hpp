#pragma once

// Word-array bitset kernels. Every routine has a portable scalar reference;
// AVX2 (x86-64) and NEON (aarch64) variants are selected once at runtime.
// All variants must agree bit-for-bit with the scalar reference.

#include <cstddef>
#include <cstdint>

namespace mmph::simd {

using Word = std::uint64_t;

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa) noexcept;

struct BitKernels {
    Isa isa;
    // dst[i] = a[i] & b[i]
    void (*and_into)(Word* dst, const Word* a, const Word* b, std::size_t n);
    // dst[i] = a[i] & ~b[i]
    void (*andnot_into)(Word* dst, const Word* a, const Word* b, std::size_t n);
    // dst[i] = a[i] | b[i]
    void (*or_into)(Word* dst, const Word* a, const Word* b, std::size_t n);
    std::size_t (*popcount)(const Word* a, std::size_t n);
    std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
    bool (*intersects)(const Word* a, const Word* b, std::size_t n);
    // a is a subset of b
    bool (*is_subset)(const Word* a, const Word* b, std::size_t n);
};

const BitKernels& scalar_kernels() noexcept;

/// nullptr when the variant is not compiled in or the CPU lacks the ISA.
const BitKernels* avx2_kernels() noexcept;
const BitKernels* neon_kernels() noexcept;

/// Best available variant, unless MMPH_SIMD=scalar is set or force_isa was called.
const BitKernels& active_kernels() noexcept;

/// Pins the dispatch target (tests, benchmarking). Returns false if unavailable.
bool force_isa(Isa isa) noexcept;

} // namespace mmph::simd
