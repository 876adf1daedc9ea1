#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "palk/engine.hpp"

namespace palk::cli {

/// Entry point of the `palk` tool. Exit codes: 0 accept/clean, 1
/// reject/mismatch, 2 usage error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

// Benchmark input families.
const std::vector<std::string>& bench_families();
std::string bench_input(std::string_view family, std::int64_t n, std::uint64_t seed = 1);

struct BenchRow {
    std::string family;
    std::int64_t n = 0;
    EngineKind engine = EngineKind::linear;
    std::int64_t nanos = 0;
    /// False when the time cap stopped the run early.
    bool completed = true;
    std::int64_t appended = 0;
    EngineCounters counters;
    IteratorCounters iterator;
};

/// Feeds the whole input to one engine with m = all ones (m[0] = 1).
/// A positive cap aborts the run once it is exceeded.
BenchRow bench_run(std::string_view family, std::string_view input, EngineKind kind, const EngineOptions& options = {},
                   std::chrono::nanoseconds cap = std::chrono::nanoseconds::zero());

struct FuzzConfig {
    std::uint64_t seed = 1;
    int max_len_ab = 14;
    int max_len_abc = 9;
    int max_k = 4;
    int random_cases = 24;
    int random_max_len = 1500;
    int threads = 1;
    std::int64_t inject_fault = -1;
};

struct FuzzMismatch {
    std::string text;
    int k = 0;
    EngineKind engine = EngineKind::naive;
    std::int64_t prefix = 0;
    bool got = false;
    bool expected = false;
};

struct FuzzReport {
    std::uint64_t cases = 0;
    std::optional<FuzzMismatch> first;
};

/// Deterministic list of fuzz strings: every maximal-length string of the
/// exhaustive sweeps (each shorter one is a prefix), then the random ones.
std::vector<std::string> fuzz_cases(const FuzzConfig& cfg);
FuzzReport run_fuzz(const FuzzConfig& cfg);

/// Per-prefix verdicts (one '0'/'1' per letter) of PalPowerRecognizer.
std::string recognize_bits(std::string_view input, int k, EngineKind kind, const EngineOptions& options = {});

}  // namespace palk::cli
