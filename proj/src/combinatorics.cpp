#include "palk/combinatorics.hpp"

#include <algorithm>

#include "palk/contract.hpp"

namespace palk {

bool is_palindrome(std::string_view w) noexcept {
    return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin());
}

std::int64_t min_period(std::string_view w) {
    PALK_EXPECT(!w.empty(), "min_period of the empty string");
    std::vector<std::int64_t> border(w.size(), 0);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::int64_t k = border[i - 1];
        while (k > 0 && w[i] != w[static_cast<std::size_t>(k)]) k = border[static_cast<std::size_t>(k - 1)];
        if (w[i] == w[static_cast<std::size_t>(k)]) ++k;
        border[i] = k;
    }
    return static_cast<std::int64_t>(w.size()) - border.back();
}

CanonicalDecomposition canonical_decomposition(std::string_view palindrome) {
    PALK_EXPECT(!palindrome.empty() && is_palindrome(palindrome), "canonical decomposition needs a nonempty palindrome");
    CanonicalDecomposition cd;
    auto n = static_cast<std::int64_t>(palindrome.size());
    cd.p = min_period(palindrome);
    std::int64_t ulen = n % cd.p;
    cd.e = n / cd.p;
    cd.u = std::string(palindrome.substr(0, static_cast<std::size_t>(ulen)));
    cd.v = std::string(palindrome.substr(static_cast<std::size_t>(ulen), static_cast<std::size_t>(cd.p - ulen)));
    return cd;
}

bool is_primitive(std::string_view w) {
    PALK_EXPECT(!w.empty(), "is_primitive of the empty string");
    auto n = static_cast<std::int64_t>(w.size());
    std::int64_t p = min_period(w);
    return p == n || n % p != 0;
}

namespace {
// Minimal period by direct scan; independent of the border computation.
std::int64_t scan_period(std::string_view w) {
    auto n = static_cast<std::int64_t>(w.size());
    for (std::int64_t p = 1; p < n; ++p) {
        bool ok = true;
        for (std::int64_t i = 0; i + p < n && ok; ++i) ok = w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(i + p)];
        if (ok) return p;
    }
    return n;
}
}  // namespace

std::vector<SuffixPalindrome> leading_suffix_palindromes(std::string_view w) {
    auto n = static_cast<std::int64_t>(w.size());
    std::vector<SuffixPalindrome> out;
    // Smallest minimal period among suffix-palindromes longer than the current one.
    std::int64_t min_longer_period = -1;
    for (std::int64_t len = n; len >= 0; --len) {
        std::string_view suf = w.substr(static_cast<std::size_t>(n - len));
        if (!is_palindrome(suf)) continue;
        if (min_longer_period < 0 || 2 * min_longer_period > len) out.push_back({n - len, len});
        if (len > 0) {
            std::int64_t p = scan_period(suf);
            if (min_longer_period < 0 || p < min_longer_period) min_longer_period = p;
        }
    }
    return out;
}

}  // namespace palk
