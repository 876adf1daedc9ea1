#include "palk/recognizer.hpp"

namespace palk {

LPalRecognizer::LPalRecognizer(std::unique_ptr<OnlineRecognizer> inner, EngineKind kind, const EngineOptions& options)
    : inner_(std::move(inner)) {
    PALK_EXPECT(inner_ != nullptr, "lpal_wrap needs an inner recognizer");
    engine_ = make_engine(kind, inner_->accepts_empty(), options);
}

bool LPalRecognizer::feed(std::uint8_t letter) {
    bool in_l = inner_->feed(letter);
    return engine_->append(letter, in_l);
}

std::unique_ptr<OnlineRecognizer> lpal_wrap(std::unique_ptr<OnlineRecognizer> inner, EngineKind kind,
                                            const EngineOptions& options) {
    return std::make_unique<LPalRecognizer>(std::move(inner), kind, options);
}

PalPowerRecognizer::PalPowerRecognizer(int k, EngineKind kind, const EngineOptions& options) {
    PALK_EXPECT(k >= 1, "k must be positive");
    engines_.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) engines_.push_back(make_engine(kind, j == 0, options));
}

bool PalPowerRecognizer::feed(std::uint8_t letter) {
    bool b = false;
    for (auto& e : engines_) b = e->append(letter, b);
    return b;
}

std::uint64_t PalPowerRecognizer::total_work() const noexcept {
    std::uint64_t w = 0;
    for (const auto& e : engines_) w += e->counters().work;
    return w;
}

}  // namespace palk
