#include "palk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "palk/engine_linear.hpp"
#include "palk/oracle.hpp"
#include "palk/recognizer.hpp"

namespace palk::cli {

namespace {

// Longest input the quadratic oracle subcommand accepts.
constexpr std::size_t kOracleLimit = 10000;

// Three palindromes splitting a 43-letter string; accepted at k = 3.
constexpr std::string_view kThreePalindromes =
    "abaaba"
    "babacabababaabaabaabababacabab"
    "abababa";

std::string random_palindrome(std::mt19937_64& rng, int max_len, char letters) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> letter_dist(0, letters - 1);
    int len = len_dist(rng);
    std::string half;
    for (int i = 0; i < (len + 1) / 2; ++i) half.push_back(static_cast<char>('a' + letter_dist(rng)));
    std::string w = half;
    for (int i = len / 2 - 1; i >= 0; --i) w.push_back(half[static_cast<std::size_t>(i)]);
    return w;
}

std::string random_string(std::mt19937_64& rng, std::int64_t n, int letters) {
    std::uniform_int_distribution<int> d(0, letters - 1);
    std::string w(static_cast<std::size_t>(n), 'a');
    for (auto& ch : w) ch = static_cast<char>('a' + d(rng));
    return w;
}

void all_strings(int len, const std::string& alphabet, std::vector<std::string>& sink) {
    std::vector<int> digit(static_cast<std::size_t>(len), 0);
    const int base = static_cast<int>(alphabet.size());
    for (;;) {
        std::string w(static_cast<std::size_t>(len), alphabet[0]);
        for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = alphabet[static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])];
        sink.push_back(std::move(w));
        int i = len - 1;
        while (i >= 0 && ++digit[static_cast<std::size_t>(i)] == base) digit[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
    }
}

std::optional<FuzzMismatch> check_case(const std::string& w, const FuzzConfig& cfg) {
    EngineOptions options;
    options.fault_at = cfg.inject_fault;
    for (int k = 1; k <= cfg.max_k; ++k) {
        const oracle::PrefixBits want = oracle::pal_power_prefix_bits(w, k);
        for (EngineKind kind : {EngineKind::naive, EngineKind::nlogn, EngineKind::linear}) {
            PalPowerRecognizer rec(k, kind, options);
            for (std::size_t i = 0; i < w.size(); ++i) {
                bool got = rec.feed(static_cast<std::uint8_t>(w[i]));
                if (got != (want[i + 1] != 0)) {
                    return FuzzMismatch{w.substr(0, i + 1), k, kind, static_cast<std::int64_t>(i + 1), got, want[i + 1] != 0};
                }
            }
        }
    }
    return std::nullopt;
}

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void strip_trailing_newline(std::string& s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
    if (!s.empty() && s.back() == '\r') s.pop_back();
}

std::vector<std::int64_t> parse_sizes(const std::string& text) {
    std::vector<std::int64_t> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        long long v = std::stoll(item, &used);
        if (used != item.size() || v < 0) throw std::invalid_argument("bad size '" + item + "'");
        sizes.push_back(v);
    }
    return sizes;
}

}  // namespace

const std::vector<std::string>& bench_families() {
    static const std::vector<std::string> families = {"equal", "aab", "rand2", "rand26", "periodic"};
    return families;
}

std::string bench_input(std::string_view family, std::int64_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (family == "equal") return std::string(static_cast<std::size_t>(n), 'a');
    if (family == "aab") {
        std::string w(static_cast<std::size_t>(n), 'a');
        for (std::int64_t i = 2; i < n; i += 3) w[static_cast<std::size_t>(i)] = 'b';
        return w;
    }
    if (family == "rand2") return random_string(rng, n, 2);
    if (family == "rand26") return random_string(rng, n, 26);
    if (family == "periodic") {
        // Concatenated palindromes (uv)^e u with short u, v and large e, in
        // the spirit of strings split into a few long periodic palindromes.
        std::string w;
        w.reserve(static_cast<std::size_t>(n));
        std::uniform_int_distribution<int> reps(3, 40);
        while (static_cast<std::int64_t>(w.size()) < n) {
            std::string u = random_palindrome(rng, 3, 3);
            std::string v = random_palindrome(rng, 4, 3);
            if (v.empty()) v = "c";
            int e = reps(rng);
            for (int i = 0; i < e; ++i) w += u + v;
            w += u;
        }
        w.resize(static_cast<std::size_t>(n));
        return w;
    }
    throw std::invalid_argument("unknown bench family '" + std::string(family) + "'");
}

BenchRow bench_run(std::string_view family, std::string_view input, EngineKind kind, const EngineOptions& options,
                   std::chrono::nanoseconds cap) {
    using clock = std::chrono::steady_clock;
    BenchRow row;
    row.family = std::string(family);
    row.n = static_cast<std::int64_t>(input.size());
    row.engine = kind;
    auto engine = make_engine(kind, true, options);
    const auto start = clock::now();
    const bool capped = cap > std::chrono::nanoseconds::zero();
    std::int64_t i = 0;
    for (; i < row.n; ++i) {
        engine->append(static_cast<std::uint8_t>(input[static_cast<std::size_t>(i)]), true);
        if (capped && (i & 1023) == 1023 && clock::now() - start > cap) {
            ++i;
            row.completed = false;
            break;
        }
    }
    row.nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count();
    row.appended = i;
    row.counters = engine->counters();
    row.iterator = engine->iterator().counters();
    return row;
}

std::vector<std::string> fuzz_cases(const FuzzConfig& cfg) {
    std::vector<std::string> cases;
    if (cfg.max_len_ab > 0) all_strings(cfg.max_len_ab, "ab", cases);
    if (cfg.max_len_abc > 0) all_strings(cfg.max_len_abc, "abc", cases);
    std::mt19937_64 rng(cfg.seed);
    const int alphabets[] = {2, 3, 26};
    for (int i = 0; i < cfg.random_cases; ++i) {
        std::uniform_int_distribution<int> len(1, std::max(1, cfg.random_max_len));
        const int letters = alphabets[i % 3];
        if (i % 2 == 0) {
            cases.push_back(random_string(rng, len(rng), letters));
        } else {
            // Period-rich: concatenated cubic palindromes.
            std::string w = bench_input("periodic", len(rng), rng());
            cases.push_back(std::move(w));
        }
    }
    return cases;
}

FuzzReport run_fuzz(const FuzzConfig& cfg) {
    const std::vector<std::string> cases = fuzz_cases(cfg);
    FuzzReport report;
    report.cases = cases.size();
    const int threads = std::max(1, cfg.threads);
    std::atomic<std::size_t> first_bad{cases.size()};
    std::vector<std::optional<FuzzMismatch>> found(static_cast<std::size_t>(threads));
    auto worker = [&](int t) {
        for (std::size_t i = static_cast<std::size_t>(t); i < cases.size(); i += static_cast<std::size_t>(threads)) {
            if (i > first_bad.load()) break;
            if (auto bad = check_case(cases[i], cfg)) {
                found[static_cast<std::size_t>(t)] = bad;
                std::size_t cur = first_bad.load();
                while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
                }
                break;
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    // Lowest failing case index wins, so the report does not depend on scheduling.
    const std::size_t bad = first_bad.load();
    if (bad < cases.size()) report.first = found[bad % static_cast<std::size_t>(threads)];
    return report;
}

std::string recognize_bits(std::string_view input, int k, EngineKind kind, const EngineOptions& options) {
    PalPowerRecognizer rec(k, kind, options);
    std::string bits;
    bits.reserve(input.size());
    for (char ch : input) bits.push_back(rec.feed(static_cast<std::uint8_t>(ch)) ? '1' : '0');
    return bits;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Online recognition of palindrome powers Pal^k"};
    app.require_subcommand(1);

    int k = 1;
    std::string engine_name = "linear";
    bool final_only = false;
    bool strip_newline = true;
    std::string input_path;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input_path, "Input file (default: standard input)");
        sub->add_flag("--strip-newline,!--no-strip-newline", strip_newline, "Drop one trailing newline (default on)");
    };
    auto add_engine = [&](CLI::App* sub) {
        sub->add_option("--engine", engine_name, "naive, nlogn or linear")->check(CLI::IsMember({"naive", "nlogn", "linear"}));
    };

    auto* recognize = app.add_subcommand("recognize", "Per-prefix membership in Pal^k");
    recognize->add_option("--k", k, "Number of palindromes")->check(CLI::PositiveNumber);
    add_engine(recognize);
    recognize->add_flag("--final,!--per-prefix", final_only, "Print only ACCEPT/REJECT for the whole input");
    add_input(recognize);

    auto* oracle_cmd = app.add_subcommand("oracle", "Per-prefix membership by the quadratic reference");
    oracle_cmd->add_option("--k", k, "Number of palindromes")->check(CLI::PositiveNumber);
    oracle_cmd->add_flag("--final,!--per-prefix", final_only, "Print only ACCEPT/REJECT for the whole input");
    add_input(oracle_cmd);

    auto* trace = app.add_subcommand("trace", "Dump the longest suffix-palindrome center and all suffix-palindrome centers per letter");
    add_input(trace);

    FuzzConfig fuzz_cfg;
    auto* fuzz = app.add_subcommand("fuzz", "Compare all engines against the reference");
    fuzz->add_option("--seed", fuzz_cfg.seed, "Seed for the random cases");
    fuzz->add_option("--max-ab", fuzz_cfg.max_len_ab, "Exhaustive length over {a,b}");
    fuzz->add_option("--max-abc", fuzz_cfg.max_len_abc, "Exhaustive length over {a,b,c}");
    fuzz->add_option("--max-k", fuzz_cfg.max_k, "Largest k")->check(CLI::PositiveNumber);
    fuzz->add_option("--random-cases", fuzz_cfg.random_cases, "Number of random strings");
    fuzz->add_option("--random-len", fuzz_cfg.random_max_len, "Maximal random string length");
    fuzz->add_option("--threads", fuzz_cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    fuzz->add_option("--inject-fault", fuzz_cfg.inject_fault, "")->group("");

    std::string sizes_arg = "100000,1000000";
    std::vector<std::string> families;
    std::vector<std::string> bench_engines;
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "Time engines on generated inputs (TSV on stdout)");
    bench->add_option("--sizes", sizes_arg, "Comma-separated input lengths");
    bench->add_option("--family", families, "Input families (default: all)")->check(CLI::IsMember(bench_families()));
    bench->add_option("--engine", bench_engines, "Engines (default: linear)")->check(CLI::IsMember({"naive", "nlogn", "linear"}));
    bench->add_option("--seed", bench_seed, "Seed for the random families");

    auto* selftest = app.add_subcommand("selftest", "Quick end-to-end check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "palk: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    auto load_input = [&](std::string& data) -> bool {
        if (input_path.empty() || input_path == "-") {
            data = read_all(in);
        } else {
            std::ifstream f(input_path, std::ios::binary);
            if (!f) {
                err << "palk: cannot read '" << input_path << "'\n";
                return false;
            }
            data = read_all(f);
        }
        if (strip_newline) strip_trailing_newline(data);
        return true;
    };

    if (recognize->parsed() || oracle_cmd->parsed()) {
        std::string data;
        if (!load_input(data)) return 2;
        std::string bits;
        if (recognize->parsed()) {
            bits = recognize_bits(data, k, *parse_engine_kind(engine_name));
        } else {
            if (data.size() > kOracleLimit) {
                err << "palk: oracle is quadratic; input limited to " << kOracleLimit << " letters\n";
                return 2;
            }
            oracle::PrefixBits b = oracle::pal_power_prefix_bits(data, k);
            for (std::size_t i = 1; i < b.size(); ++i) bits.push_back(b[i] ? '1' : '0');
        }
        const bool accepted = !bits.empty() && bits.back() == '1';
        if (final_only)
            out << (accepted ? "ACCEPT" : "REJECT") << "\n";
        else
            out << bits << "\n";
        return accepted ? 0 : 1;
    }

    if (trace->parsed()) {
        std::string data;
        if (!load_input(data)) return 2;
        PalIterator it;
        for (char ch : data) {
            it.append(static_cast<std::uint8_t>(ch));
            out << it.size() << "\t" << it.max_pal().to_string() << "\t";
            bool first = true;
            for (Center c : it.suffix_centers()) {
                out << (first ? "" : " ") << c.to_string();
                first = false;
            }
            out << "\n";
        }
        return 0;
    }

    if (fuzz->parsed()) {
        FuzzReport report = run_fuzz(fuzz_cfg);
        if (report.first) {
            const FuzzMismatch& m = *report.first;
            err << "mismatch: text=\"" << m.text << "\" k=" << m.k << " engine=" << to_string(m.engine)
                << " prefix=" << m.prefix << " got=" << m.got << " expected=" << m.expected << "\n";
            out << "FAIL " << report.cases << " cases\n";
            return 1;
        }
        out << "OK " << report.cases << " cases\n";
        return 0;
    }

    if (bench->parsed()) {
        std::vector<std::int64_t> sizes;
        try {
            sizes = parse_sizes(sizes_arg);
        } catch (const std::exception& e) {
            err << "palk: --sizes: " << e.what() << "\n";
            return 2;
        }
        if (families.empty()) families = bench_families();
        if (bench_engines.empty()) bench_engines = {"linear"};
        out << "family\tn\tengine\tnanos\tmanacher_iterations\tunlinks\trecalculations\tpredictable_calls"
               "\tloop_iterations\tmax_loop_per_append\twork\n";
        for (const auto& fam : families) {
            for (std::int64_t n : sizes) {
                const std::string input = bench_input(fam, n, bench_seed);
                for (const auto& en : bench_engines) {
                    BenchRow r = bench_run(fam, input, *parse_engine_kind(en));
                    out << r.family << "\t" << r.n << "\t" << en << "\t" << r.nanos << "\t"
                        << r.iterator.manacher_iterations << "\t" << r.iterator.unlinks << "\t"
                        << r.counters.recalculations << "\t" << r.counters.predictable_calls << "\t"
                        << r.counters.loop_iterations << "\t" << r.counters.max_loop_per_append << "\t"
                        << r.counters.work << "\n";
                    const double ns_per = r.n > 0 ? static_cast<double>(r.nanos) / static_cast<double>(r.n) : 0.0;
                    err << fam << " n=" << n << " " << en << ": " << static_cast<double>(r.nanos) / 1e6 << " ms, "
                        << ns_per << " ns/letter\n";
                }
            }
        }
        return 0;
    }

    if (selftest->parsed()) {
        for (EngineKind kind : {EngineKind::naive, EngineKind::nlogn, EngineKind::linear}) {
            std::string bits = recognize_bits(kThreePalindromes, 3, kind);
            if (bits.back() != '1') {
                err << "selftest: " << to_string(kind) << " rejects the three-palindrome fixture\n";
                return 1;
            }
        }
        FuzzConfig quick;
        quick.max_len_ab = 10;
        quick.max_len_abc = 6;
        quick.random_cases = 6;
        quick.random_max_len = 300;
        FuzzReport report = run_fuzz(quick);
        if (report.first) {
            err << "selftest: mismatch on \"" << report.first->text << "\" k=" << report.first->k << " engine="
                << to_string(report.first->engine) << "\n";
            return 1;
        }
        out << "selftest ok (" << report.cases << " cases)\n";
        return 0;
    }
    return 2;
}

}  // namespace palk::cli
