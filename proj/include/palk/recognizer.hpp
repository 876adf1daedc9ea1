#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "palk/engine.hpp"

namespace palk {

/// Reads one letter at a time and reports whether the prefix read so far is
/// in the language.
class OnlineRecognizer {
public:
    virtual ~OnlineRecognizer() = default;
    virtual bool feed(std::uint8_t letter) = 0;
    virtual bool accepts_empty() const = 0;
};

/// The language {ε}.
class EpsilonRecognizer final : public OnlineRecognizer {
public:
    bool feed(std::uint8_t) override { return false; }
    bool accepts_empty() const override { return true; }
};

/// L·Pal from a recognizer for L: every letter goes to the inner recognizer
/// first, and its verdict becomes the engine's m bit for the same prefix.
class LPalRecognizer final : public OnlineRecognizer {
public:
    LPalRecognizer(std::unique_ptr<OnlineRecognizer> inner, EngineKind kind, const EngineOptions& options = {});
    bool feed(std::uint8_t letter) override;
    bool accepts_empty() const override { return false; }
    const PalEngine& engine() const noexcept { return *engine_; }

private:
    std::unique_ptr<OnlineRecognizer> inner_;
    std::unique_ptr<PalEngine> engine_;
};

std::unique_ptr<OnlineRecognizer> lpal_wrap(std::unique_ptr<OnlineRecognizer> inner, EngineKind kind,
                                            const EngineOptions& options = {});

/// Pal^k with k chained engines. The first has m[0] = 1 and is always fed
/// b = 0; engine j+1 receives engine j's verdict.
class PalPowerRecognizer final : public OnlineRecognizer {
public:
    PalPowerRecognizer(int k, EngineKind kind, const EngineOptions& options = {});
    bool feed(std::uint8_t letter) override;
    bool accepts_empty() const override { return false; }

    int k() const noexcept { return static_cast<int>(engines_.size()); }
    const PalEngine& engine(int j) const { return *engines_.at(static_cast<std::size_t>(j)); }
    /// Sum of the engines' work counters.
    std::uint64_t total_work() const noexcept;

private:
    std::vector<std::unique_ptr<PalEngine>> engines_;
};

}  // namespace palk
