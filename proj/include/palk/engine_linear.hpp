#pragma once

#include <cstdint>
#include <vector>

#include "palk/engine.hpp"

namespace palk {

/// Layout of one series of suffix-palindromes (uv)^*u sharing the minimal
/// period p of a cubic leading suffix-palindrome w.
///
/// t is the longest suffix of the text with period p. z[j_t..j_t_end] is the
/// p-bit block summarising the series; r0 + r1 = min(beta+1, p) positions of
/// it, read cyclically downward from j_w, feed the prediction.
struct SeriesGeometry {
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::int64_t w_len = 0;
    std::int64_t u_len = 0;
    std::int64_t t_len = 0;
    std::int64_t j_t = 0;
    std::int64_t j_t_end = 0;
    std::int64_t j_w = 0;
    std::int64_t r0 = 0;
    std::int64_t r1 = 0;
    /// Predictable calls over which t keeps period p (capped by f).
    std::int64_t q = 0;
    /// Whether the series was predicted through z (otherwise term by term).
    bool via_z = false;
};

/// Word of future res bits (bit x is res[n+x], x <= q) contributed by a
/// series: the cyclic z window, replicated at stride p with one
/// multiplication by g[p] when the period fits in a word.
Word series_prediction(const BitArray& z, const SeriesGeometry& g, const WordParams& params);

/// Linear-time engine. Besides res[n] it keeps res[n..n+f] filled in advance
/// for the next f calls that extend the longest suffix-palindrome
/// (predictable calls); such calls touch only the two new shortest
/// suffix-palindromes. Any other call rebuilds the prediction by walking the
/// leading suffix-palindromes and reading each long cubic series from z.
class LinearEngine final : public PalEngine {
public:
    explicit LinearEngine(bool m0, const WordParams& params = WordParams::full());

    bool append(std::uint8_t a, bool b) override;
    EngineKind kind() const noexcept override { return EngineKind::linear; }

    const WordParams& params() const noexcept { return params_; }
    std::int64_t prediction_length() const noexcept { return f_; }
    /// res[i] for any i <= n + beta, including predicted bits.
    bool prediction_bit(std::int64_t i) const noexcept { return res_.get(i); }
    bool z_at(std::int64_t i) const noexcept { return z_.get(i); }
    std::int64_t last_recalc_length() const noexcept { return n0_; }
    bool last_call_recalculated() const noexcept { return last_recalculated_; }

    /// Prediction horizon of a current suffix-palindrome center.
    std::int64_t pr(Center c) const;

    /// Records the series geometry of each recalculation (for tests).
    void set_trace(bool on) { trace_ = on; }
    const std::vector<SeriesGeometry>& last_series() const noexcept { return last_series_; }

private:
    std::int64_t pr_raw(std::int64_t c) const noexcept;
    void recalc_prediction();
    SeriesGeometry geometry(std::int64_t w_center, std::int64_t w_len, std::int64_t p) const;
    void recalc_z(const SeriesGeometry& g);
    Word m_upto(std::int64_t i0, std::int64_t i1, std::int64_t last) const noexcept;

    WordParams params_;
    BitArray z_;
    std::vector<std::int32_t> z_period_;
    std::vector<std::int32_t> z_seen_;
    std::int64_t f_ = 0;
    std::int64_t n0_ = 0;
    bool last_recalculated_ = false;
    bool trace_ = false;
    std::vector<SeriesGeometry> last_series_;
};

}  // namespace palk
