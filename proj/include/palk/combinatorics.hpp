#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace palk {

/// w = (uv)^e u with u, v palindromes, v nonempty and |uv| the minimal period.
struct CanonicalDecomposition {
    std::string u;
    std::string v;
    std::int64_t e = 0;
    std::int64_t p = 0;
};

struct SuffixPalindrome {
    std::int64_t start = 0;  // 0-based offset of the first letter
    std::int64_t length = 0;
    friend bool operator==(const SuffixPalindrome&, const SuffixPalindrome&) = default;
};

bool is_palindrome(std::string_view w) noexcept;

/// Smallest period of a nonempty string, via the longest border.
std::int64_t min_period(std::string_view w);

CanonicalDecomposition canonical_decomposition(std::string_view palindrome);

bool is_primitive(std::string_view w);

/// Length of the longest proper leading suffix-palindrome of a leading
/// palindrome of length len with minimal period p.
constexpr std::int64_t next_leading_length(std::int64_t len, std::int64_t p) noexcept {
    std::int64_t a = len - p;
    std::int64_t b = p + len % p;
    return a < b ? a : b;
}

/// All leading suffix-palindromes of w, longest first, including the empty
/// one. Quadratic scan straight from the definition; meant for tests.
std::vector<SuffixPalindrome> leading_suffix_palindromes(std::string_view w);

}  // namespace palk
