#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "palk/contract.hpp"

namespace palk {

/// A subpalindrome center c (integer or half-integer), stored as 2c.
class Center {
public:
    constexpr Center() = default;
    constexpr explicit Center(std::int64_t doubled) : doubled_(doubled) {}

    static constexpr Center of_suffix(std::int64_t text_len, std::int64_t pal_len) {
        return Center(2 * text_len - pal_len + 1);
    }

    constexpr std::int64_t doubled() const noexcept { return doubled_; }
    constexpr std::int64_t floor() const noexcept { return doubled_ / 2; }
    constexpr std::int64_t ceil() const noexcept { return (doubled_ + 1) / 2; }
    constexpr bool is_integer() const noexcept { return doubled_ % 2 == 0; }
    double value() const noexcept { return static_cast<double>(doubled_) / 2.0; }
    std::string to_string() const;

    friend constexpr bool operator==(Center, Center) = default;
    friend constexpr auto operator<=>(Center, Center) = default;

private:
    std::int64_t doubled_ = 1;
};

/// Position symmetric to x with respect to y.
constexpr Center refl(Center x, Center y) noexcept { return Center(2 * y.doubled() - x.doubled()); }

struct IteratorCounters {
    std::uint64_t manacher_iterations = 0;
    std::uint64_t unlinks = 0;
};

/// Online palindromic iterator: maxPal, rad, nextPal and len in O(1),
/// appends in amortized O(1).
///
/// Radii are kept for every center up to the longest suffix-palindrome's
/// center s; larger centers are answered by reflection through s. The
/// suffix-palindrome centers form a doubly linked list starting at s.
/// lend[i] lists centers x < s whose maximal palindrome starts at i+1, which
/// is exactly what an append needs to find the suffix-palindromes it breaks.
class PalIterator {
public:
    PalIterator();

    void append(std::uint8_t a);

    std::int64_t size() const noexcept { return static_cast<std::int64_t>(text_.size()); }
    std::string_view text() const noexcept { return text_; }
    const IteratorCounters& counters() const noexcept { return counters_; }

    Center max_pal() const {
        PALK_EXPECT(!text_.empty(), "max_pal on empty text");
        return Center(s_);
    }
    std::int64_t rad(Center x) const {
        PALK_EXPECT(x.doubled() >= 1 && x.doubled() <= 2 * size() + 1, "center out of range");
        return rad_raw(x.doubled());
    }
    std::int64_t len(Center x) const {
        PALK_EXPECT(x.doubled() >= 1 && x.doubled() <= 2 * size() + 1, "center out of range");
        return len_raw(x.doubled());
    }
    Center next_pal(Center x) const {
        PALK_EXPECT(x.doubled() >= 1 && x.doubled() <= 2 * size(), "center out of range");
        PALK_EXPECT(on_list(x.doubled()), "next_pal of a center that is not a suffix-palindrome");
        return Center(nodes_[static_cast<std::size_t>(x.doubled())].next);
    }
    bool is_suffix_center(Center x) const noexcept {
        return x.doubled() >= s_ && x.doubled() <= 2 * size() + 1 && on_list(x.doubled());
    }

    /// Suffix-palindrome centers from max_pal to |text|+1/2.
    std::vector<Center> suffix_centers() const;

    // Doubled-center fast paths used by the engines; no range checks.
    std::int64_t max_pal_raw() const noexcept { return s_; }
    std::int64_t rad_raw(std::int64_t x) const noexcept {
        if (x <= s_) return nodes_[static_cast<std::size_t>(x)].r;
        std::int64_t mirrored = nodes_[static_cast<std::size_t>(2 * s_ - x)].r;
        std::int64_t room = size() - x / 2;
        return mirrored < room ? mirrored : room;
    }
    std::int64_t len_raw(std::int64_t x) const noexcept { return 2 * rad_raw(x) + (x % 2 == 0 ? 1 : 0); }
    std::int64_t next_raw(std::int64_t x) const noexcept { return nodes_[static_cast<std::size_t>(x)].next; }

private:
    bool on_list(std::int64_t x) const noexcept { return nodes_[static_cast<std::size_t>(x)].prev >= 0; }
    void link(std::int64_t x);
    void unlink(std::int64_t x);

    std::string text_;
    std::int64_t s_ = 1;
    // Everything kept per doubled center, packed so one center is one cache access.
    struct Node {
        std::int32_t r = 0;           // radius, valid up to s_
        std::int32_t next = -1;       // suffix-palindrome list
        std::int32_t prev = -1;       // >= 0 exactly while listed (0 is the sentinel)
        std::int32_t lend_next = -1;  // bucket chain by start position
    };
    std::vector<Node> nodes_;
    std::vector<std::int32_t> lend_head_;  // bucket heads by start position
    std::int64_t tail_ = 0;
    IteratorCounters counters_;
};

}  // namespace palk
