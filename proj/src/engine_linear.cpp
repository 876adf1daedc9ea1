#include "palk/engine_linear.hpp"

#include <algorithm>

namespace palk {

namespace {

constexpr Word shl(Word x, std::int64_t k) noexcept { return k >= kWordBits ? 0 : x << k; }


}  // namespace

Word series_prediction(const BitArray& z, const SeriesGeometry& g, const WordParams& params) {
    Word pattern;
    if (g.p <= params.beta()) {
        pattern = (z.bwd(g.j_t, g.j_w) | shl(z.bwd(g.j_w + 1, g.j_t_end), g.r0)) * params.g(static_cast<int>(g.p));
    } else {
        pattern = z.bwd(g.j_w - g.r0 + 1, g.j_w) | shl(z.bwd(g.j_t_end - g.r1 + 1, g.j_t_end), g.r0);
    }
    return pattern & low_mask(static_cast<int>(g.q + 1)) & params.word_mask();
}

LinearEngine::LinearEngine(bool m0, const WordParams& params) : PalEngine(m0), params_(params), z_(1) {
    res_.resize(static_cast<std::size_t>(params_.width()));
}

std::int64_t LinearEngine::pr(Center c) const {
    PALK_EXPECT(n_ > 0 && it_.is_suffix_center(c), "pr of a center that is not a suffix-palindrome");
    return pr_raw(c.doubled());
}

std::int64_t LinearEngine::pr_raw(std::int64_t c) const noexcept {
    const std::int64_t s = it_.max_pal_raw();
    if (c == s) return f_;
    std::int64_t survive = it_.rad_raw(2 * s - c) - it_.rad_raw(c);
    return std::min(survive, f_);
}

bool LinearEngine::append(std::uint8_t a, bool b) {
    const std::int64_t old_s = n_ > 0 ? it_.max_pal_raw() : -1;
    it_.append(a);
    const std::int64_t n = ++n_;
    m_.push_back(b);
    z_.push_back(false);
    res_.resize(static_cast<std::size_t>(n + params_.width()));
    ++counters_.appends;

    const std::int64_t s = it_.max_pal_raw();
    const bool predictable = s == old_s;
    if (predictable) ++counters_.predictable_calls;
    if (predictable && f_ > 0) {
        --f_;
        const std::int64_t pr_letter = pr_raw(2 * n);
        const std::int64_t pr_empty = pr_raw(2 * n + 1);
        Word x = m_.bwd(n - 1 - pr_letter, n - 1) | shl(m_.bwd(n - pr_empty, n - 1), 1);
        res_.or_fwd(n, n + f_, x);
        counters_.work += 2;
        last_recalculated_ = false;
    } else {
        // f stays below beta so that k predictable calls cost floor(k/beta) recalculations.
        f_ = std::min<std::int64_t>(params_.beta() - 1, n - it_.len_raw(s));
        recalc_prediction();
        ++counters_.recalculations;
        last_recalculated_ = true;
    }
    return res_.get(n);
}

SeriesGeometry LinearEngine::geometry(std::int64_t w_center, std::int64_t w_len, std::int64_t p) const {
    const std::int64_t n = n_;
    const std::int64_t s = it_.max_pal_raw();
    SeriesGeometry g;
    g.n = n;
    g.p = p;
    g.w_len = w_len;
    g.u_len = w_len % p;
    const std::int64_t u_center = 2 * n - g.u_len + 1;
    const std::int64_t u_rad = it_.rad_raw(u_center);
    g.t_len = w_len + it_.rad_raw(2 * w_center - u_center) - u_rad;
    g.q = std::min(f_, it_.rad_raw(2 * s - u_center) - u_rad);
    g.j_t = n - g.t_len;
    g.j_t_end = g.j_t + p - 1;
    g.j_w = n - w_len;
    const std::int64_t beta = params_.beta();
    g.r0 = std::min(beta, g.j_w - g.j_t) + 1;
    g.r1 = std::min(beta + 1 - g.r0, g.j_t_end - g.j_w);
    return g;
}

Word LinearEngine::m_upto(std::int64_t i0, std::int64_t i1, std::int64_t last) const noexcept {
    if (i0 > last) return 0;
    return m_.fwd(i0, std::min(i1, last));
}

// Keeps z[i] = m[i] or m[i+p] or ... over m[0..n-1] for the positions of the
// series block that the prediction reads.
void LinearEngine::recalc_z(const SeriesGeometry& g) {
    const std::int64_t n = n_;
    const std::int64_t last = n - 1;
    const std::int64_t p = g.p;
    const std::int64_t periods = g.t_len / p;

    auto fold = [&](std::int64_t a, std::int64_t b, std::int64_t k_from, std::int64_t k_to) {
        Word v = 0;
        for (std::int64_t k = std::max<std::int64_t>(k_from, 0); k <= k_to; ++k) {
            v |= m_upto(a + k * p, b + k * p, last);
            ++counters_.work;
        }
        return v;
    };

    // Blocks slide with n, so freshness is tracked per position: z_period_ is
    // the period a position was folded for, z_seen_ the text length at that
    // time. OR is idempotent, so repairing from the stalest position is safe.
    auto refresh = [&](std::int64_t a, std::int64_t b) {
        if (b < a) return;
        // Stamps are only ever needed inside series blocks; grow on demand.
        if (static_cast<std::size_t>(b) >= z_seen_.size()) {
            const std::size_t cap = std::max(static_cast<std::size_t>(b) + 1, 2 * z_seen_.size());
            z_period_.resize(cap, 0);
            z_seen_.resize(cap, 0);
        }
        bool rebuild = false;
        std::int64_t oldest = n;
        for (std::int64_t x = a; x <= b; ++x) {
            const auto i = static_cast<std::size_t>(x);
            if (z_period_[i] != p) { rebuild = true; break; }
            oldest = std::min<std::int64_t>(oldest, z_seen_[i]);
        }
        if (rebuild) {
            z_.set_fwd(a, b, fold(a, b, 0, periods));
        } else if (oldest < n) {
            // m bits at indices >= oldest are the only ones possibly missing.
            const std::int64_t k0 = oldest > b ? (oldest - b) / p : 0;
            z_.or_fwd(a, b, fold(a, b, k0, periods));
        }
        for (std::int64_t x = a; x <= b; ++x) {
            const auto i = static_cast<std::size_t>(x);
            z_period_[i] = static_cast<std::int32_t>(p);
            z_seen_[i] = static_cast<std::int32_t>(n);
        }
    };

    if (p > params_.width()) {
        refresh(g.j_w - g.r0 + 1, g.j_w);
        refresh(g.j_t_end - g.r1 + 1, g.j_t_end);
    } else {
        refresh(g.j_t, g.j_t_end);
    }
}

void LinearEngine::recalc_prediction() {
    const std::int64_t n = n_;
    const std::int64_t s = it_.max_pal_raw();
    const std::int64_t f = f_;
    const std::int64_t two_beta = 2 * static_cast<std::int64_t>(params_.beta());
    if (trace_) last_series_.clear();

    res_.clear_fwd(n, n + params_.beta());
    std::uint64_t steps = 0;
    for (std::int64_t x = s; x != 2 * n + 1;) {
        ++steps;
        const std::int64_t len = it_.len_raw(x);
        const std::int64_t next = it_.next_raw(x);
        const std::int64_t p = len - it_.len_raw(next);
        const std::int64_t d = std::min(p + len % p, len - p);
        const std::int64_t j = n - len;
        res_.or_fwd(n, n + f, m_.bwd(j - pr_raw(x), j));
        ++counters_.work;

        if (3 * p <= len) {
            SeriesGeometry g = geometry(x, len, p);
            recalc_z(g);
            g.via_z = x == s || len > two_beta;
            if (g.via_z) {
                res_.or_fwd(n, n + g.q, series_prediction(z_, g, params_));
                ++counters_.work;
                // When t stops being periodic after q calls, at most one series
                // member survives the break; it gets its own window.
                if (g.q < f) {
                    const std::int64_t survivor = g.t_len - g.q;
                    if (survivor >= std::max<std::int64_t>(1, g.u_len) && survivor <= len && (survivor - g.u_len) % p == 0) {
                        const std::int64_t jj = n - survivor;
                        res_.or_fwd(n, n + f, m_.bwd(jj - pr_raw(2 * n - survivor + 1), jj));
                        ++counters_.work;
                    }
                }
            } else {
                for (std::int64_t y = next; it_.len_raw(y) > d; y = it_.next_raw(y)) {
                    const std::int64_t jj = n - it_.len_raw(y);
                    res_.or_fwd(n, n + f, m_.bwd(jj - pr_raw(y), jj));
                    ++counters_.work;
                }
            }
            if (trace_) last_series_.push_back(g);
        }
        x = 2 * n - d + 1;
    }
    const std::int64_t pr_empty = pr_raw(2 * n + 1);
    res_.or_fwd(n, n + f, shl(m_.bwd(n - pr_empty, n - 1), 1));
    counters_.work += 2;
    note_loop(steps);
    n0_ = n;
}

}  // namespace palk
