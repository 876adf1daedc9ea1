#include <doctest.h>

#include <cmath>
#include <random>

#include "palk/combinatorics.hpp"
#include "support.hpp"

using namespace palk;

namespace {

std::int64_t scan_period(std::string_view w) {
    for (std::size_t p = 1; p < w.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < w.size() && ok; ++i) ok = w[i] == w[i + p];
        if (ok) return static_cast<std::int64_t>(p);
    }
    return static_cast<std::int64_t>(w.size());
}

bool rotation_primitive(std::string_view w) {
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::string rot = std::string(w.substr(k)) + std::string(w.substr(0, k));
        if (rot == w) return false;
    }
    return true;
}

std::string rev(std::string s) { return {s.rbegin(), s.rend()}; }

std::vector<std::string> palindromes_up_to(int len) {
    std::vector<std::string> out;
    for (int l = 1; l <= len; ++l)
        for (const auto& w : palk::testing::all_strings(l, "ab"))
            if (is_palindrome(w)) out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("periods") {
    CHECK(min_period("aaaa") == 1);
    CHECK(min_period("abaababaabaababaaba") == 8);
    CHECK(min_period("ab") == 2);
    CHECK_THROWS_AS(min_period(""), ContractViolation);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 3000; ++t) {
        std::string w = palk::testing::random_text(rng, 1 + rng() % 16, 2 + t % 2);
        REQUIRE(min_period(w) == scan_period(w));
    }
}

TEST_CASE("primitivity") {
    CHECK_FALSE(is_primitive("abab"));
    CHECK(is_primitive("aab"));
    CHECK(is_primitive("a"));
    CHECK_THROWS_AS(is_primitive(""), ContractViolation);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 3000; ++t) {
        std::string w = palk::testing::random_text(rng, 1 + rng() % 12, 2);
        REQUIRE(is_primitive(w) == rotation_primitive(w));
    }
}

TEST_CASE("canonical decompositions") {
    auto d = canonical_decomposition("abaababaabaababaaba");
    CHECK(d.u == "aba");
    CHECK(d.v == "ababa");
    CHECK(d.e == 2);
    CHECK(d.p == 8);
    auto a = canonical_decomposition("aaa");
    CHECK(a.u == "");
    CHECK(a.v == "a");
    CHECK(a.e == 3);
    CHECK_THROWS_AS(canonical_decomposition("ab"), ContractViolation);
    CHECK_THROWS_AS(canonical_decomposition(""), ContractViolation);

    for (const auto& w : palindromes_up_to(14)) {
        auto c = canonical_decomposition(w);
        std::string back;
        for (std::int64_t i = 0; i < c.e; ++i) back += c.u + c.v;
        back += c.u;
        REQUIRE(back == w);
        REQUIRE(is_palindrome(c.u));
        REQUIRE(is_palindrome(c.v));
        REQUIRE_FALSE(c.v.empty());
        REQUIRE(c.p == static_cast<std::int64_t>((c.u + c.v).size()));
        REQUIRE(c.p == min_period(w));
        REQUIRE(is_primitive(c.u + c.v));
    }
}

TEST_CASE("suffix-palindromes of a palindrome give its periods") {
    for (const auto& w : palindromes_up_to(14)) {
        for (std::size_t k = 1; k < w.size(); ++k) {
            std::string_view u = std::string_view(w).substr(k);
            if (!is_palindrome(u)) continue;
            const std::size_t p = w.size() - u.size();
            for (std::size_t i = 0; i + p < w.size(); ++i) REQUIRE(w[i] == w[i + p]);
        }
    }
}

TEST_CASE("a palindromic pair splits uniquely iff it is primitive") {
    for (int len = 1; len <= 14; ++len) {
        for (const auto& w : palk::testing::all_strings(len, "ab")) {
            int splits = 0;
            for (std::size_t cut = 0; cut < w.size(); ++cut)
                if (is_palindrome(std::string_view(w).substr(0, cut)) && is_palindrome(std::string_view(w).substr(cut))) ++splits;
            if (splits == 0) continue;
            REQUIRE((splits == 1) == is_primitive(w));
        }
    }
}

TEST_CASE("next leading length") {
    CHECK(next_leading_length(7, 2) == 3);
    CHECK(next_leading_length(3, 2) == 1);
    CHECK(next_leading_length(1, 1) == 0);
}

TEST_CASE("leading suffix-palindromes") {
    auto lead = leading_suffix_palindromes("abababa");
    std::vector<std::int64_t> lens;
    for (auto sp : lead) lens.push_back(sp.length);
    CHECK(lens == std::vector<std::int64_t>{7, 3, 1, 0});

    // In aabababa the suffix ababa is the only non-leading subpalindrome ending at the end.
    lens.clear();
    for (auto sp : leading_suffix_palindromes("aabababa")) lens.push_back(sp.length);
    CHECK(lens == std::vector<std::int64_t>{7, 3, 1, 0});
    CHECK(leading_suffix_palindromes("aabababa").front().start == 1);
}

TEST_CASE("leading chain follows next_leading_length and stays logarithmic") {
    std::mt19937_64 rng(3);
    auto check_prefixes = [](const std::string& w) {
        for (std::size_t n = 1; n <= w.size(); ++n) {
            std::string_view pre = std::string_view(w).substr(0, n);
            auto lead = leading_suffix_palindromes(pre);
            for (std::size_t i = 0; i + 1 < lead.size(); ++i) {
                std::string_view pal = pre.substr(static_cast<std::size_t>(lead[i].start));
                const std::int64_t p = min_period(pal);
                REQUIRE(lead[i + 1].length == next_leading_length(lead[i].length, p));
            }
            REQUIRE(static_cast<double>(lead.size()) <= std::log(static_cast<double>(n)) / std::log(1.5) + 2);
        }
    };
    for (int len = 1; len <= 12; ++len)
        for (const auto& w : palk::testing::all_strings(len, "ab")) check_prefixes(w);
    for (int t = 0; t < 40; ++t) {
        std::string w = palk::testing::random_text(rng, 200, 2 + t % 2);
        if (t % 4 == 0) {
            w.clear();
            while (w.size() < 200) w += (t % 8 == 0 ? "aab" : "abaababaab");
            w.resize(200);
        }
        check_prefixes(w);
    }
}
