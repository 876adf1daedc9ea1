#pragma once

// Brute-force references shared by the unit tests and the acceptance run.

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "palk/engine_linear.hpp"
#include "palk/oracle.hpp"
#include "palk/pal_iterator.hpp"

namespace palk::testing {

inline std::string random_text(std::mt19937_64& rng, std::size_t n, int letters) {
    std::uniform_int_distribution<int> d(0, letters - 1);
    std::string w(n, 'a');
    for (auto& ch : w) ch = static_cast<char>('a' + d(rng));
    return w;
}

/// Every string of length len over the alphabet, in lexicographic order.
inline std::vector<std::string> all_strings(int len, std::string_view alphabet) {
    std::vector<std::string> out{""};
    for (int i = 0; i < len; ++i) {
        std::vector<std::string> next;
        next.reserve(out.size() * alphabet.size());
        for (const auto& w : out)
            for (char ch : alphabet) next.push_back(w + ch);
        out.swap(next);
    }
    return out;
}

/// Radii of all centers of a fixed text, by expansion. Radii inside a prefix
/// are the full-text radii clipped at the prefix end.
class RadiusTable {
public:
    explicit RadiusTable(std::string_view w) : n_(static_cast<std::int64_t>(w.size())), r_(static_cast<std::size_t>(2 * n_ + 2), 0) {
        for (std::int64_t c = 1; c <= 2 * n_ + 1; ++c) r_[static_cast<std::size_t>(c)] = oracle::expansion_radius(w, Center(c));
    }
    std::int64_t rad(std::int64_t c, std::int64_t n) const {
        return std::min(r_[static_cast<std::size_t>(c)], n - c / 2);
    }
    std::int64_t len(std::int64_t c, std::int64_t n) const { return 2 * rad(c, n) + (c % 2 == 0 ? 1 : 0); }
    bool is_suffix(std::int64_t c, std::int64_t n) const { return c / 2 + rad(c, n) == n; }
    /// Doubled centers of all suffix-palindromes of the length-n prefix, ascending.
    std::vector<std::int64_t> suffix_centers(std::int64_t n) const {
        std::vector<std::int64_t> out;
        for (std::int64_t c = std::max<std::int64_t>(1, n); c <= 2 * n + 1; ++c)
            if (is_suffix(c, n)) out.push_back(c);
        return out;
    }

private:
    std::int64_t n_;
    std::vector<std::int64_t> r_;
};

/// Empty when the iterator's list, max_pal and radii agree with the table.
inline std::string check_iterator(const PalIterator& it, const RadiusTable& rt) {
    const std::int64_t n = it.size();
    std::vector<std::int64_t> want = rt.suffix_centers(n);
    std::vector<std::int64_t> got;
    for (Center c : it.suffix_centers()) got.push_back(c.doubled());
    std::ostringstream why;
    if (got != want) {
        why << "n=" << n << ": suffix list differs";
        return why.str();
    }
    if (it.max_pal().doubled() != want.front()) {
        why << "n=" << n << ": max_pal " << it.max_pal().to_string();
        return why.str();
    }
    for (std::int64_t c = 1; c <= 2 * n + 1; ++c) {
        if (it.rad(Center(c)) != rt.rad(c, n)) {
            why << "n=" << n << ": rad(" << Center(c).to_string() << ") = " << it.rad(Center(c)) << ", want " << rt.rad(c, n);
            return why.str();
        }
    }
    return {};
}

/// Checks the prediction window res[n+1..n+beta] of a linear engine fed the
/// text w (or a prefix of it): every f-prediction bit is set, every other set
/// bit up to n+f is an additional prediction, and nothing is set past n+f.
///
/// An additional prediction at position pos is justified by a palindrome
/// w'[j+1..pos] with center beyond n+1/2 and m[j] = 1, j <= n, where w' is the
/// text after pos-n further calls that keep the longest suffix-palindrome.
inline std::string check_prediction(const LinearEngine& e, const RadiusTable& rt, const std::vector<std::uint8_t>& m,
                                    std::string_view w) {
    const std::int64_t n = e.text_len();
    const std::int64_t f = e.prediction_length();
    const std::int64_t beta = e.params().beta();
    const std::vector<std::int64_t> centers = rt.suffix_centers(n);
    const std::int64_t s = centers.front();
    auto mbit = [&](std::int64_t i) { return i >= 0 && i <= n && m[static_cast<std::size_t>(i)] != 0; };
    auto pr = [&](std::int64_t c) {
        if (c == s) return f;
        return std::min(f, rt.rad(2 * s - c, n) - rt.rad(c, n));
    };
    // Letter i (1-based) of the text extended through the longest suffix-palindrome.
    auto letter = [&](std::int64_t i) { return w[static_cast<std::size_t>((i <= n ? i : s - i) - 1)]; };
    std::ostringstream why;
    if (f < 0 || f > beta || f > n - rt.len(s, n)) {
        why << "n=" << n << ": f=" << f << " out of bounds";
        return why.str();
    }
    for (std::int64_t x = 1; x <= f; ++x) {
        bool predicted = false;
        for (std::int64_t c : centers)
            if (pr(c) >= x && mbit(n - rt.len(c, n) - x)) predicted = true;
        const std::int64_t pos = n + x;
        const bool bit = e.prediction_bit(pos);
        if (predicted && !bit) {
            why << "n=" << n << ": f-prediction bit res[" << pos << "] missing";
            return why.str();
        }
        if (bit && !predicted) {
            bool witnessed = false;
            for (std::int64_t c = 2 * n + 2; c <= 2 * pos && !witnessed; ++c) {
                const std::int64_t j = c - pos - 1;
                if (j < 0 || j > n || !mbit(j)) continue;
                bool pal = true;
                for (std::int64_t a = j + 1, b = pos; a < b && pal; ++a, --b) pal = letter(a) == letter(b);
                witnessed = pal;
            }
            if (!witnessed) {
                why << "n=" << n << ": res[" << pos << "] set without a justification";
                return why.str();
            }
        }
    }
    for (std::int64_t pos = n + f + 1; pos <= n + beta; ++pos) {
        if (e.prediction_bit(pos)) {
            why << "n=" << n << ": res[" << pos << "] set beyond the window (f=" << f << ")";
            return why.str();
        }
    }
    return {};
}

/// After a recalculation with tracing on: the geometry of every recorded
/// series and the z blocks it reads, recomputed from m[0..n-1] directly.
inline std::string check_series_blocks(const LinearEngine& e, const std::vector<std::uint8_t>& m, std::string_view text) {
    const std::int64_t n = e.text_len();
    const std::int64_t width = e.params().width();
    std::ostringstream why;
    for (const SeriesGeometry& g : e.last_series()) {
        const std::int64_t p = g.p;
        if (g.r0 + g.r1 != std::min(width, p) || g.t_len >= g.w_len + p || g.t_len < g.w_len) {
            why << "n=" << n << ": inconsistent geometry p=" << p << " |w|=" << g.w_len << " |t|=" << g.t_len;
            return why.str();
        }
        // t really is the longest suffix with period p.
        std::int64_t t = p;
        while (t < n && text[static_cast<std::size_t>(n - t - 1)] == text[static_cast<std::size_t>(n - t - 1 + p)]) ++t;
        if (t != g.t_len) {
            why << "n=" << n << ": |t| = " << g.t_len << ", scan gives " << t;
            return why.str();
        }
        std::vector<std::int64_t> positions;
        if (p > width) {
            for (std::int64_t i = g.j_w - g.r0 + 1; i <= g.j_w; ++i) positions.push_back(i);
            for (std::int64_t i = g.j_t_end - g.r1 + 1; i <= g.j_t_end; ++i) positions.push_back(i);
        } else {
            for (std::int64_t i = g.j_t; i <= g.j_t_end; ++i) positions.push_back(i);
        }
        for (std::int64_t i : positions) {
            bool want = false;
            for (std::int64_t k = i; k <= n - 1; k += p) want = want || m[static_cast<std::size_t>(k)] != 0;
            if (e.z_at(i) != want) {
                why << "n=" << n << ": z[" << i << "] = " << e.z_at(i) << " for period " << p << ", fold gives " << want;
                return why.str();
            }
        }
    }
    return {};
}

}  // namespace palk::testing
