#pragma once

#include "mmph/simd/bit_kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <vector>

namespace mmph {

/// Fixed-size-after-construction bitset whose bulk operations go through the
/// dispatched SIMD kernels.
class Bitset {
public:
    using Word = simd::Word;

    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const Word* data() const noexcept { return words_.data(); }
    Word* data() noexcept { return words_.data(); }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= Word{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(Word{1} << (i & 63)); }
    void clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

    std::size_t count() const noexcept { return simd::active_kernels().popcount(data(), word_count()); }
    bool none() const noexcept {
        for (Word w : words_)
            if (w) return false;
        return true;
    }
    bool any() const noexcept { return !none(); }

    std::size_t count_and(const Bitset& o) const noexcept {
        return simd::active_kernels().and_popcount(data(), o.data(), word_count());
    }
    bool intersects(const Bitset& o) const noexcept {
        return simd::active_kernels().intersects(data(), o.data(), word_count());
    }
    bool is_subset_of(const Bitset& o) const noexcept {
        return simd::active_kernels().is_subset(data(), o.data(), word_count());
    }

    Bitset& operator&=(const Bitset& o) noexcept {
        simd::active_kernels().and_into(data(), data(), o.data(), word_count());
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        simd::active_kernels().or_into(data(), data(), o.data(), word_count());
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) noexcept {
        simd::active_kernels().andnot_into(data(), data(), o.data(), word_count());
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Index of the lowest set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const noexcept {
        if (from >= bits_) return bits_;
        std::size_t w = from >> 6;
        Word cur = words_[w] & (~Word{0} << (from & 63));
        while (true) {
            if (cur) return (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w >= words_.size()) return bits_;
            cur = words_[w];
        }
    }
    std::size_t find_first() const noexcept { return find_next(0); }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word cur = words_[w];
            while (cur) {
                fn((w << 6) + static_cast<std::size_t>(std::countr_zero(cur)));
                cur &= cur - 1;
            }
        }
    }

private:
    std::size_t bits_ = 0;
    std::vector<Word> words_;
};

} // namespace mmph
