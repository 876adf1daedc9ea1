#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "palk/bitblocks.hpp"
#include "palk/pal_iterator.hpp"

namespace palk {

enum class EngineKind { naive, nlogn, linear };

std::string_view to_string(EngineKind kind) noexcept;
std::optional<EngineKind> parse_engine_kind(std::string_view name) noexcept;

struct EngineCounters {
    std::uint64_t appends = 0;
    /// Iterations of the per-append suffix-palindrome loop (all suffix-palindromes
    /// for the naive engine, leading ones otherwise).
    std::uint64_t loop_iterations = 0;
    std::uint64_t max_loop_per_append = 0;
    std::uint64_t predictable_calls = 0;
    std::uint64_t recalculations = 0;
    /// Coarse unit-cost tally of word operations and loop steps.
    std::uint64_t work = 0;
};

/// Palindromic engine: append(a, b) extends the text by a, sets m[n] = b and
/// returns res[n], where res[i] = 1 iff m[j] = 1 and text[j+1..i] is a
/// palindrome for some j < i. m[0] is fixed at construction.
class PalEngine {
public:
    explicit PalEngine(bool m0);
    virtual ~PalEngine() = default;
    PalEngine(const PalEngine&) = delete;
    PalEngine& operator=(const PalEngine&) = delete;

    virtual bool append(std::uint8_t a, bool b) = 0;
    virtual EngineKind kind() const noexcept = 0;

    std::int64_t text_len() const noexcept { return n_; }
    bool res_at(std::int64_t i) const {
        PALK_EXPECT(i >= 0 && i <= n_, "res index beyond the text");
        return res_.get(i);
    }
    bool m_at(std::int64_t i) const {
        PALK_EXPECT(i >= 0 && i <= n_, "m index beyond the text");
        return m_.get(i);
    }
    const PalIterator& iterator() const noexcept { return it_; }
    const EngineCounters& counters() const noexcept { return counters_; }

protected:
    void note_loop(std::uint64_t iterations) noexcept;

    PalIterator it_;
    BitArray m_;
    BitArray res_;
    std::int64_t n_ = 0;
    EngineCounters counters_;
};

/// Loops over every nonempty suffix-palindrome: O(n^2) overall.
class NaiveEngine final : public PalEngine {
public:
    explicit NaiveEngine(bool m0) : PalEngine(m0) {}
    bool append(std::uint8_t a, bool b) override;
    EngineKind kind() const noexcept override { return EngineKind::naive; }
};

struct EngineOptions {
    WordParams params = WordParams::full();
    /// Test hook: flip one z bit when the text reaches this length (nlogn only).
    std::int64_t fault_at = -1;
};

std::unique_ptr<PalEngine> make_engine(EngineKind kind, bool m0, const EngineOptions& options = {});

}  // namespace palk
