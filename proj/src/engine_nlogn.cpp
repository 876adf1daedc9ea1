#include "palk/engine_nlogn.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace palk {

NlognEngine::NlognEngine(bool m0, std::int64_t fault_at) : PalEngine(m0), z_(1), fault_at_(fault_at) { z_.set(0, m0); }

bool NlognEngine::append(std::uint8_t a, bool b) {
    it_.append(a);
    const std::int64_t n = ++n_;
    m_.push_back(b);
    z_.push_back(b);
    ++counters_.appends;

    bool res = false;
    std::uint64_t steps = 0;
    for (std::int64_t x = it_.max_pal_raw(); x != 2 * n + 1;) {
        ++steps;
        const std::int64_t len = it_.len_raw(x);
        const std::int64_t p = len - it_.len_raw(it_.next_raw(x));
        const std::int64_t d = std::min(p + len % p, len - p);
        const std::int64_t j = n - len;
        if (3 * p > len)
            z_.set(static_cast<std::size_t>(j), m_.get(j));
        else if (m_.get(n - d - p))
            z_.set(static_cast<std::size_t>(j), true);
        if (n == fault_at_ && steps == 1) z_.set(static_cast<std::size_t>(j), !z_.get(j));
        res = res || z_.get(j);
        x = 2 * n - d + 1;
    }
    note_loop(steps);
    counters_.work += steps + 1;
    res_.push_back(res);
    return res;
}

bool NlognEngine::debug_check_z(std::string* failure) const {
    const std::int64_t n = n_;
    const std::string_view text = it_.text();
    const auto w = static_cast<std::size_t>(n + 1);
    // pal[i*w + j]: text[i+1..j] is a palindrome.
    std::vector<std::uint8_t> pal(w * w, 0);
    for (std::int64_t len = 0; len <= n; ++len)
        for (std::int64_t i = 0; i + len <= n; ++i) {
            std::int64_t j = i + len;
            pal[static_cast<std::size_t>(i) * w + static_cast<std::size_t>(j)] =
                len <= 1 || (text[static_cast<std::size_t>(i)] == text[static_cast<std::size_t>(j - 1)] &&
                             pal[static_cast<std::size_t>(i + 1) * w + static_cast<std::size_t>(j - 1)]);
        }

    std::vector<std::int64_t> jmax(w), period(w), next_len(w);
    for (std::int64_t i = 0; i <= n; ++i) jmax[static_cast<std::size_t>(i)] = i;
    std::vector<std::int64_t> lens, leading;
    for (std::int64_t end = 0; end <= n; ++end) {
        lens.clear();
        for (std::int64_t len = end; len >= 0; --len)
            if (pal[static_cast<std::size_t>(end - len) * w + static_cast<std::size_t>(end)]) lens.push_back(len);
        // A palindrome's borders are its suffix-palindromes, so the next
        // shorter suffix-palindrome gives the minimal period.
        leading.clear();
        std::int64_t min_longer = -1;
        std::vector<std::int64_t> periods(lens.size(), 0);
        for (std::size_t k = 0; k < lens.size(); ++k) {
            std::int64_t len = lens[k];
            if (min_longer < 0 || 2 * min_longer > len) leading.push_back(static_cast<std::int64_t>(k));
            if (len > 0) {
                periods[k] = len - lens[k + 1];
                if (min_longer < 0 || periods[k] < min_longer) min_longer = periods[k];
            }
        }
        for (std::size_t t = 0; t < leading.size(); ++t) {
            auto k = static_cast<std::size_t>(leading[t]);
            std::int64_t len = lens[k];
            auto i = static_cast<std::size_t>(end - len);
            if (len > 0 && end >= jmax[i]) {
                jmax[i] = end;
                period[i] = periods[k];
                next_len[i] = lens[static_cast<std::size_t>(leading[t + 1])];
            }
        }
    }

    for (std::int64_t i = 0; i <= n; ++i) {
        auto ii = static_cast<std::size_t>(i);
        bool expected = m_.get(i);
        if (jmax[ii] > i) {
            std::int64_t last = jmax[ii] - next_len[ii] - period[ii];
            for (std::int64_t k = i + period[ii]; k <= last; k += period[ii]) expected = expected || m_.get(k);
        }
        if (expected != z_.get(i)) {
            if (failure) {
                std::ostringstream os;
                os << "z[" << i << "] = " << z_.get(i) << ", expected " << expected << " (j=" << jmax[ii]
                   << ", p=" << period[ii] << ", d=" << next_len[ii] << ", text=" << text << ')';
                *failure = os.str();
            }
            return false;
        }
    }
    return true;
}

}  // namespace palk
