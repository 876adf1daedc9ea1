#include "palk/oracle.hpp"

#include "palk/combinatorics.hpp"
#include "palk/contract.hpp"

namespace palk::oracle {

namespace {

// pal[i][j] for 0 <= i <= j <= n: w[i+1..j] (1-based) is a palindrome.
class PalTable {
public:
    explicit PalTable(std::string_view w) : n_(static_cast<std::int64_t>(w.size())), bits_((n_ + 1) * (n_ + 1), 0) {
        for (std::int64_t len = 0; len <= n_; ++len)
            for (std::int64_t i = 0; i + len <= n_; ++i) {
                std::int64_t j = i + len;
                bool p = len <= 1 || (w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(j - 1)] && at(i + 1, j - 1));
                bits_[static_cast<std::size_t>(i * (n_ + 1) + j)] = p;
            }
    }
    bool at(std::int64_t i, std::int64_t j) const { return bits_[static_cast<std::size_t>(i * (n_ + 1) + j)] != 0; }

private:
    std::int64_t n_;
    std::vector<std::uint8_t> bits_;
};

}  // namespace

std::vector<Center> suffix_palindrome_centers(std::string_view w) {
    auto n = static_cast<std::int64_t>(w.size());
    std::vector<Center> out;
    for (std::int64_t len = n; len >= 0; --len)
        if (is_palindrome(w.substr(static_cast<std::size_t>(n - len)))) out.push_back(Center::of_suffix(n, len));
    return out;
}

PrefixBits lpal_prefix_bits(const std::vector<std::uint8_t>& m, std::string_view w) {
    PALK_EXPECT(m.size() == w.size() + 1, "m must have |w|+1 bits");
    auto n = static_cast<std::int64_t>(w.size());
    PalTable pal(w);
    PrefixBits bits(static_cast<std::size_t>(n + 1), 0);
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = 0; j < i && !bits[static_cast<std::size_t>(i)]; ++j)
            if (m[static_cast<std::size_t>(j)] && pal.at(j, i)) bits[static_cast<std::size_t>(i)] = 1;
    return bits;
}

PrefixBits pal_power_prefix_bits(std::string_view w, int k) {
    PALK_EXPECT(k >= 1, "k must be positive");
    auto n = static_cast<std::int64_t>(w.size());
    PalTable pal(w);
    PrefixBits layer(static_cast<std::size_t>(n + 1), 0);
    layer[0] = 1;  // Pal^0 = {eps}
    for (int step = 0; step < k; ++step) {
        PrefixBits next(static_cast<std::size_t>(n + 1), 0);
        for (std::int64_t i = 1; i <= n; ++i)
            for (std::int64_t j = 0; j < i && !next[static_cast<std::size_t>(i)]; ++j)
                if (layer[static_cast<std::size_t>(j)] && pal.at(j, i)) next[static_cast<std::size_t>(i)] = 1;
        layer = std::move(next);
    }
    return layer;
}

std::vector<std::int64_t> pal_power_split(std::string_view w, std::int64_t prefix_len, int k) {
    PALK_EXPECT(k >= 1 && prefix_len >= 0 && prefix_len <= static_cast<std::int64_t>(w.size()), "bad split query");
    std::string_view prefix = w.substr(0, static_cast<std::size_t>(prefix_len));
    PalTable pal(prefix);
    std::vector<PrefixBits> layers;
    layers.emplace_back(static_cast<std::size_t>(prefix_len + 1), 0);
    layers[0][0] = 1;
    for (int step = 0; step < k; ++step) {
        PrefixBits next(static_cast<std::size_t>(prefix_len + 1), 0);
        for (std::int64_t i = 1; i <= prefix_len; ++i)
            for (std::int64_t j = 0; j < i && !next[static_cast<std::size_t>(i)]; ++j)
                if (layers.back()[static_cast<std::size_t>(j)] && pal.at(j, i)) next[static_cast<std::size_t>(i)] = 1;
        layers.push_back(std::move(next));
    }
    if (!layers[static_cast<std::size_t>(k)][static_cast<std::size_t>(prefix_len)]) return {};
    std::vector<std::int64_t> lengths;
    std::int64_t end = prefix_len;
    for (int step = k; step >= 1; --step) {
        for (std::int64_t j = 0; j < end; ++j)
            if (layers[static_cast<std::size_t>(step - 1)][static_cast<std::size_t>(j)] && pal.at(j, end)) {
                lengths.insert(lengths.begin(), end - j);
                end = j;
                break;
            }
    }
    return lengths;
}

std::int64_t expansion_radius(std::string_view w, Center x) {
    auto n = static_cast<std::int64_t>(w.size());
    // 1-based positions: left = ceil(x) - 1 - r, right = floor(x) + 1 + r.
    std::int64_t r = 0;
    while (true) {
        std::int64_t left = x.ceil() - 1 - r;
        std::int64_t right = x.floor() + 1 + r;
        if (left < 1 || right > n || w[static_cast<std::size_t>(left - 1)] != w[static_cast<std::size_t>(right - 1)]) break;
        ++r;
    }
    return r;
}

}  // namespace palk::oracle
