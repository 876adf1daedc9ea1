#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "palk/pal_iterator.hpp"

namespace palk::oracle {

/// bits[i] is the verdict for the length-i prefix; bits.size() == n + 1.
using PrefixBits = std::vector<std::uint8_t>;

/// Centers of all suffix-palindromes of w (the empty one included), ascending.
std::vector<Center> suffix_palindrome_centers(std::string_view w);

/// bits[i] = 1 iff m[j] = 1 and w[j+1..i] is a palindrome for some j < i.
PrefixBits lpal_prefix_bits(const std::vector<std::uint8_t>& m, std::string_view w);

/// bits[i] = 1 iff w[1..i] splits into exactly k nonempty palindromes.
PrefixBits pal_power_prefix_bits(std::string_view w, int k);

/// Splits a prefix accepted by pal_power_prefix_bits into k palindromes
/// (lengths in order); empty if the prefix is not in Pal^k.
std::vector<std::int64_t> pal_power_split(std::string_view w, std::int64_t prefix_len, int k);

/// Radius of the longest subpalindrome centered at x, by two-pointer expansion.
std::int64_t expansion_radius(std::string_view w, Center x);

}  // namespace palk::oracle
