#include "palk/pal_iterator.hpp"

#include <algorithm>

namespace palk {

std::string Center::to_string() const {
    std::string out = std::to_string(doubled_ / 2);
    if (doubled_ % 2 != 0) out += ".5";
    return out;
}

PalIterator::PalIterator() {
    // Index 0 is the list sentinel; center 1/2 is the empty text's only center.
    nodes_.resize(2);
    lend_head_.assign(1, -1);
}

void PalIterator::link(std::int64_t x) {
    Node& node = nodes_[static_cast<std::size_t>(x)];
    nodes_[static_cast<std::size_t>(tail_)].next = static_cast<std::int32_t>(x);
    node.prev = static_cast<std::int32_t>(tail_);
    node.next = -1;
    tail_ = x;
}

void PalIterator::unlink(std::int64_t x) {
    Node& node = nodes_[static_cast<std::size_t>(x)];
    const std::int32_t p = node.prev;
    const std::int32_t nx = node.next;
    if (p >= 0) nodes_[static_cast<std::size_t>(p)].next = nx;
    if (nx >= 0)
        nodes_[static_cast<std::size_t>(nx)].prev = p;
    else
        tail_ = p;
    node.prev = -1;
    ++counters_.unlinks;
}

void PalIterator::append(std::uint8_t a) {
    const std::int64_t n = size();
    const std::size_t need = static_cast<std::size_t>(2 * (n + 1) + 2);
    if (nodes_.size() < need) {
        // vector growth is already geometric; sizing exactly keeps untouched capacity unfaulted.
        nodes_.resize(need);
        lend_head_.resize(need / 2 + 1, -1);
    }

    // Manacher step over centers s0, s0+1/2, ..., |text|+1/2.
    const std::int64_t s0 = s_;
    bool extended = false;
    for (; s_ < 2 * (n + 1); ++s_) {
        auto si = static_cast<std::size_t>(s_);
        std::int64_t rad = std::min<std::int64_t>(nodes_[static_cast<std::size_t>(2 * s0 - s_)].r, n - s_ / 2);
        std::int64_t left = (s_ + 1) / 2 - rad - 1;  // letter before the palindrome, 1-based
        if (s_ / 2 + rad == n && left >= 1 && static_cast<std::uint8_t>(text_[static_cast<std::size_t>(left - 1)]) == a) {
            nodes_[si].r = static_cast<std::int32_t>(rad + 1);
            extended = true;
            break;
        }
        // Only advances of s are counted; the extending pass is one per letter.
        ++counters_.manacher_iterations;
        nodes_[si].r = static_cast<std::int32_t>(rad);
        auto bucket = static_cast<std::size_t>(left);
        nodes_[si].lend_next = lend_head_[bucket];
        lend_head_[bucket] = static_cast<std::int32_t>(s_);
    }
    if (!extended) nodes_[static_cast<std::size_t>(s_)].r = 0;  // s is the new one-letter suffix

    text_.push_back(static_cast<char>(a));
    const std::int64_t len = n + 1;
    link(2 * len);
    link(2 * len + 1);

    std::int64_t start = (s_ + 1) / 2 - nodes_[static_cast<std::size_t>(s_)].r;
    for (std::int32_t x = lend_head_[static_cast<std::size_t>(start)]; x >= 0; x = nodes_[static_cast<std::size_t>(x)].lend_next)
        unlink(2 * s_ - x);
}

std::vector<Center> PalIterator::suffix_centers() const {
    std::vector<Center> out;
    if (text_.empty()) return out;
    for (std::int64_t x = s_; x >= 0; x = nodes_[static_cast<std::size_t>(x)].next) {
        out.emplace_back(x);
        if (x == 2 * size() + 1) break;
    }
    return out;
}

}  // namespace palk
