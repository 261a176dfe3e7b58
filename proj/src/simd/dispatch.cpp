#include "mmph/simd/bit_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace mmph::simd {

#if !MMPH_HAVE_AVX2
const BitKernels* avx2_kernels() noexcept { return nullptr; }
#endif
#if !MMPH_HAVE_NEON
const BitKernels* neon_kernels() noexcept { return nullptr; }
#endif

namespace {

const BitKernels* detect() noexcept {
    if (const char* env = std::getenv("MMPH_SIMD"); env && std::string_view(env) == "scalar") return &scalar_kernels();
    if (const auto* k = avx2_kernels()) return k;
    if (const auto* k = neon_kernels()) return k;
    return &scalar_kernels();
}

std::atomic<const BitKernels*>& slot() noexcept {
    static std::atomic<const BitKernels*> active{detect()};
    return active;
}

} // namespace

const BitKernels& active_kernels() noexcept { return *slot().load(std::memory_order_relaxed); }

bool force_isa(Isa isa) noexcept {
    const BitKernels* k = nullptr;
    switch (isa) {
    case Isa::Scalar: k = &scalar_kernels(); break;
    case Isa::Avx2: k = avx2_kernels(); break;
    case Isa::Neon: k = neon_kernels(); break;
    }
    if (!k) return false;
    slot().store(k, std::memory_order_relaxed);
    return true;
}

} // namespace mmph::simd
