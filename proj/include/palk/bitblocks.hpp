#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "palk/contract.hpp"

namespace palk {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

constexpr Word low_mask(int width) noexcept {
    return width <= 0 ? 0 : (width >= kWordBits ? ~Word{0} : (Word{1} << width) - 1);
}

namespace detail {
struct ByteReverseTable {
    std::uint8_t v[256];
    constexpr ByteReverseTable() : v{} {
        for (int i = 0; i < 256; ++i) {
            int r = 0;
            for (int b = 0; b < 8; ++b)
                if (i & (1 << b)) r |= 1 << (7 - b);
            v[i] = static_cast<std::uint8_t>(r);
        }
    }
};
inline constexpr ByteReverseTable kByteReverse{};
}  // namespace detail

/// Full 64-bit reversal: byte swap, then reverse each byte through the table.
inline Word reverse_bits(Word x) noexcept {
    x = __builtin_bswap64(x);
    Word r = 0;
    for (int i = 0; i < 8; ++i)
        r |= Word{detail::kByteReverse.v[(x >> (8 * i)) & 0xff]} << (8 * i);
    return r;
}

/// Machine-word parameters: a word holds beta+1 bits, and g[i] has ones at
/// every multiple of i not exceeding beta.
class WordParams {
public:
    explicit WordParams(int beta = kWordBits - 1);

    static WordParams full() { return WordParams(kWordBits - 1); }
    static WordParams toy() { return WordParams(7); }

    int beta() const noexcept { return beta_; }
    int width() const noexcept { return beta_ + 1; }
    Word word_mask() const noexcept { return mask_; }
    Word g(int i) const noexcept { return g_[static_cast<std::size_t>(i)]; }

private:
    int beta_;
    Word mask_;
    std::vector<Word> g_;
};

/// Returns g[i]; 1 <= i <= beta.
Word mask_g(const WordParams& params, int i);

/// Growable bit array with constant-time windowed access of up to one word.
/// Positions outside [0, size) read as zero.
class BitArray {
public:
    BitArray() { words_.push_back(0); }
    explicit BitArray(std::size_t n) : BitArray() { resize(n); }

    std::size_t size() const noexcept { return length_; }

    void resize(std::size_t n) {
        PALK_EXPECT(n >= length_, "BitArray only grows");
        length_ = n;
        std::size_t need = n / kWordBits + 2;
        if (words_.size() < need) words_.resize(need, 0);
    }
    void push_back(bool b) {
        resize(length_ + 1);
        if (b) words_[(length_ - 1) / kWordBits] |= Word{1} << ((length_ - 1) % kWordBits);
    }

    bool get(std::int64_t i) const noexcept {
        if (i < 0 || static_cast<std::size_t>(i) >= length_) return false;
        return (words_[static_cast<std::size_t>(i) / kWordBits] >> (i % kWordBits)) & 1;
    }
    void set(std::size_t i, bool b) {
        PALK_EXPECT(i < length_, "bit index out of range");
        Word bit = Word{1} << (i % kWordBits);
        if (b)
            words_[i / kWordBits] |= bit;
        else
            words_[i / kWordBits] &= ~bit;
    }

    // Checked windows: 0 <= i1 - i0 < 64.
    Word read_forward(std::int64_t i0, std::int64_t i1) const {
        PALK_EXPECT(i1 >= i0 && i1 - i0 < kWordBits, "window wider than a word");
        return fwd(i0, i1);
    }
    Word read_backward(std::int64_t i0, std::int64_t i1) const {
        PALK_EXPECT(i1 >= i0 && i1 - i0 < kWordBits, "window wider than a word");
        return bwd(i0, i1);
    }
    void or_assign_forward(std::int64_t i0, std::int64_t i1, Word x) {
        check_write(i0, i1);
        or_fwd(i0, i1, x);
    }
    void or_assign_backward(std::int64_t i0, std::int64_t i1, Word x) {
        check_write(i0, i1);
        or_bwd(i0, i1, x);
    }
    void assign_forward(std::int64_t i0, std::int64_t i1, Word x) {
        check_write(i0, i1);
        set_fwd(i0, i1, x);
    }

    // Unchecked variants for engine inner loops. An empty window (i1 < i0)
    // reads as zero and writes nothing.
    Word fwd(std::int64_t i0, std::int64_t i1) const noexcept { return extract(i0, static_cast<int>(i1 - i0 + 1)); }
    Word bwd(std::int64_t i0, std::int64_t i1) const noexcept {
        int w = static_cast<int>(i1 - i0 + 1);
        if (w <= 0) return 0;
        return reverse_bits(extract(i0, w)) >> (kWordBits - w);
    }
    void or_fwd(std::int64_t i0, std::int64_t i1, Word x) noexcept {
        int w = static_cast<int>(i1 - i0 + 1);
        if (w <= 0) return;
        x &= low_mask(w);
        std::size_t idx = static_cast<std::size_t>(i0) / kWordBits;
        unsigned off = static_cast<unsigned>(i0 % kWordBits);
        words_[idx] |= x << off;
        if (off != 0) words_[idx + 1] |= x >> (kWordBits - off);
    }
    void or_bwd(std::int64_t i0, std::int64_t i1, Word x) noexcept {
        int w = static_cast<int>(i1 - i0 + 1);
        if (w <= 0) return;
        or_fwd(i0, i1, reverse_bits(x & low_mask(w)) >> (kWordBits - w));
    }
    void clear_fwd(std::int64_t i0, std::int64_t i1) noexcept {
        int w = static_cast<int>(i1 - i0 + 1);
        if (w <= 0) return;
        Word m = low_mask(w);
        std::size_t idx = static_cast<std::size_t>(i0) / kWordBits;
        unsigned off = static_cast<unsigned>(i0 % kWordBits);
        words_[idx] &= ~(m << off);
        if (off != 0) words_[idx + 1] &= ~(m >> (kWordBits - off));
    }
    void set_fwd(std::int64_t i0, std::int64_t i1, Word x) noexcept {
        clear_fwd(i0, i1);
        or_fwd(i0, i1, x);
    }

private:
    Word extract(std::int64_t start, int width) const noexcept {
        if (width <= 0) return 0;
        int lift = 0;
        if (start < 0) {
            if (-start >= width) return 0;
            lift = static_cast<int>(-start);
            width -= lift;
            start = 0;
        }
        std::size_t idx = static_cast<std::size_t>(start) / kWordBits;
        if (idx >= words_.size()) return 0;
        unsigned off = static_cast<unsigned>(start % kWordBits);
        Word x = words_[idx] >> off;
        if (off != 0 && idx + 1 < words_.size()) x |= words_[idx + 1] << (kWordBits - off);
        return (x & low_mask(width)) << lift;
    }
    void check_write(std::int64_t i0, std::int64_t i1) const {
        PALK_EXPECT(i1 >= i0 && i1 - i0 < kWordBits, "window wider than a word");
        PALK_EXPECT(i0 >= 0 && static_cast<std::size_t>(i1) < length_, "window outside the array");
    }

    std::vector<Word> words_;
    std::size_t length_ = 0;
};

// Window operations bounded by the configured word width (beta+1 bits).
Word read_forward(const WordParams& params, const BitArray& a, std::int64_t i0, std::int64_t i1);
Word read_backward(const WordParams& params, const BitArray& a, std::int64_t i0, std::int64_t i1);
void or_assign_forward(const WordParams& params, BitArray& a, std::int64_t i0, std::int64_t i1, Word x);
void or_assign_backward(const WordParams& params, BitArray& a, std::int64_t i0, std::int64_t i1, Word x);

}  // namespace palk
