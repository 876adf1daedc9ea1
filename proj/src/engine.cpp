#include "palk/engine.hpp"

#include "palk/engine_linear.hpp"
#include "palk/engine_nlogn.hpp"

namespace palk {

std::string_view to_string(EngineKind kind) noexcept {
    switch (kind) {
        case EngineKind::naive: return "naive";
        case EngineKind::nlogn: return "nlogn";
        case EngineKind::linear: return "linear";
    }
    return "?";
}

std::optional<EngineKind> parse_engine_kind(std::string_view name) noexcept {
    if (name == "naive") return EngineKind::naive;
    if (name == "nlogn") return EngineKind::nlogn;
    if (name == "linear") return EngineKind::linear;
    return std::nullopt;
}

PalEngine::PalEngine(bool m0) : m_(1), res_(1) { m_.set(0, m0); }

void PalEngine::note_loop(std::uint64_t iterations) noexcept {
    counters_.loop_iterations += iterations;
    if (iterations > counters_.max_loop_per_append) counters_.max_loop_per_append = iterations;
}

bool NaiveEngine::append(std::uint8_t a, bool b) {
    it_.append(a);
    ++n_;
    m_.push_back(b);
    ++counters_.appends;
    bool res = false;
    std::uint64_t steps = 0;
    // The empty suffix (center n+1/2) would read m[n]; it never counts.
    for (std::int64_t x = it_.max_pal_raw(); x != 2 * n_ + 1; x = it_.next_raw(x)) {
        ++steps;
        res = res || m_.get(n_ - it_.len_raw(x));
    }
    note_loop(steps);
    counters_.work += steps + 1;
    res_.push_back(res);
    return res;
}

std::unique_ptr<PalEngine> make_engine(EngineKind kind, bool m0, const EngineOptions& options) {
    switch (kind) {
        case EngineKind::naive: return std::make_unique<NaiveEngine>(m0);
        case EngineKind::nlogn: return std::make_unique<NlognEngine>(m0, options.fault_at);
        case EngineKind::linear: return std::make_unique<LinearEngine>(m0, options.params);
    }
    return nullptr;
}

}  // namespace palk
