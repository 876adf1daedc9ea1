#include <doctest.h>

#include <cmath>
#include <random>

#include "palk/pal_iterator.hpp"
#include "support.hpp"

using namespace palk;
using palk::testing::RadiusTable;

namespace {

PalIterator build(std::string_view w) {
    PalIterator it;
    for (char ch : w) it.append(static_cast<std::uint8_t>(ch));
    return it;
}

std::vector<double> centers(const PalIterator& it) {
    std::vector<double> out;
    for (Center c : it.suffix_centers()) out.push_back(c.value());
    return out;
}

Center at(double c) { return Center(static_cast<std::int64_t>(std::lround(2 * c))); }

}  // namespace

TEST_CASE("centers and reflection") {
    CHECK(refl(at(3), at(5)) == at(7));
    CHECK(refl(at(2.5), at(2.5)) == at(2.5));
    CHECK(at(8.5).to_string() == "8.5");
    CHECK(at(9).to_string() == "9");
    CHECK(at(8.5).floor() == 8);
    CHECK(at(8.5).ceil() == 9);
    CHECK(at(9).ceil() == 9);
    CHECK(Center::of_suffix(9, 2) == at(8.5));
    std::mt19937_64 rng(1);
    for (int t = 0; t < 1000; ++t) {
        Center x(static_cast<std::int64_t>(rng() % 1000) + 1), y(static_cast<std::int64_t>(rng() % 1000) + 1);
        CHECK(refl(refl(x, y), y) == x);
    }
}

TEST_CASE("radius and next-center table of aabacabaa") {
    PalIterator it = build("aabacabaa");
    CHECK(it.max_pal() == at(5));
    const int rad[] = {0, 0, 1, 0, 0, 1, 0, 0, 0, 4, 0, 0, 0, 1, 0, 0, 1, 0, 0};
    for (int c = 1; c <= 19; ++c) CHECK(it.rad(Center(c)) == rad[c - 1]);
    CHECK(it.next_pal(at(5)) == at(8.5));
    CHECK(it.next_pal(at(8.5)) == at(9));
    CHECK(it.next_pal(at(9)) == at(9.5));
    CHECK(it.len(at(5)) == 9);
    CHECK(it.len(at(8.5)) == 2);
    CHECK(it.len(at(9.5)) == 0);
    CHECK_THROWS_AS(it.next_pal(at(7)), ContractViolation);
    CHECK_THROWS_AS(it.rad(Center(20)), ContractViolation);
}

TEST_CASE("appending a breaks two suffix-palindromes of aabacaba") {
    PalIterator it = build("aabacaba");
    CHECK(centers(it) == std::vector<double>{5, 7, 8, 8.5});
    it.append('a');
    CHECK(centers(it) == std::vector<double>{5, 8.5, 9, 9.5});
}

TEST_CASE("tiny texts") {
    PalIterator empty;
    CHECK_THROWS_AS(empty.max_pal(), ContractViolation);
    PalIterator x = build("x");
    CHECK(x.max_pal() == at(1));
    CHECK(centers(x) == std::vector<double>{1, 1.5});
    PalIterator ab = build("ab");
    CHECK(centers(ab) == std::vector<double>{2, 2.5});
    CHECK(ab.next_pal(at(2)) == at(2.5));
    CHECK(ab.rad(at(2.5)) == 0);
}

TEST_CASE("exhaustive short strings match expansion") {
    for (auto [len, alphabet] : {std::pair<int, std::string>{12, "ab"}, {8, "abc"}}) {
        for (const std::string& w : palk::testing::all_strings(len, alphabet)) {
            RadiusTable rt(w);
            PalIterator it;
            for (char ch : w) {
                it.append(static_cast<std::uint8_t>(ch));
                std::string why = palk::testing::check_iterator(it, rt);
                if (!why.empty()) FAIL(w << ": " << why);
            }
        }
    }
}

TEST_CASE("long random strings match expansion and respect the counters") {
    std::mt19937_64 rng(2024);
    for (int letters : {1, 2, 3, 26}) {
        std::string w = palk::testing::random_text(rng, 10000, letters);
        RadiusTable rt(w);
        PalIterator it;
        for (std::size_t i = 0; i < w.size(); ++i) {
            it.append(static_cast<std::uint8_t>(w[i]));
            // Full radius sweeps are quadratic; spot them, but check the list every time.
            std::vector<std::int64_t> got;
            for (Center c : it.suffix_centers()) got.push_back(c.doubled());
            REQUIRE(got == rt.suffix_centers(it.size()));
            if (i % 997 == 0) REQUIRE(palk::testing::check_iterator(it, rt) == "");
        }
        const auto n = static_cast<std::uint64_t>(w.size());
        CHECK(it.counters().manacher_iterations <= 2 * n);
        CHECK(it.counters().unlinks <= 2 * n);
    }
}

TEST_CASE("oracle centers agree with the iterator") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        std::string w = palk::testing::random_text(rng, 1 + rng() % 60, 2 + t % 2);
        CHECK(build(w).suffix_centers() == oracle::suffix_palindrome_centers(w));
    }
}
