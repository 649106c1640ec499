// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gcis/corpus.hpp"
#include "gcis/decode.hpp"
#include "gcis/extract.hpp"
#include "gcis/format.hpp"
#include "gcis/grammar.hpp"
#include "gcis/sais.hpp"
#include "gcis/salcp.hpp"
#include "support/oracles.hpp"

using namespace gcis;
using Bytes = std::vector<std::uint8_t>;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Collects failures of the structural checks run on every compression.
struct StructureLog {
    std::size_t compressions = 0;
    std::size_t levels = 0;
    std::size_t rules_probed = 0;
    std::size_t max_backtrack = 0;
    std::vector<std::string> failures;

    void fail(const std::string& what)
    {
        if (failures.size() < 10)
            failures.push_back(what);
        else if (failures.size() == 10)
            failures.push_back("...");
    }
};

StructureLog g_structure;

void check_structure(const Bytes& text, const Grammar& g, const CompressTrace& trace)
{
    auto& log = g_structure;
    ++log.compressions;
    const std::string tag = "text of " + std::to_string(text.size()) + " bytes";
    for (std::size_t j = 0; j < trace.levels.size(); ++j) {
        const auto& l = trace.levels[j];
        ++log.levels;
        if (l.reduced_len > l.text_len / 2)
            log.fail(tag + ": level " + std::to_string(j) + " did not halve");
        if (l.lcp_sum > l.text_len)
            log.fail(tag + ": lcp sum above level length");
        if (l.suffix_sum > l.text_len)
            log.fail(tag + ": suffix sum above level length");
    }
    for (const auto& level : g.levels) {
        const auto ef = encode_ef_level(level, kDefaultLgK);
        for (const EliasFano* seq : {&ef.lcp_sums, &ef.suffix_sums}) {
            if (seq->core_bits() > EliasFano::core_bound(seq->size(), seq->universe()))
                log.fail(tag + ": Elias-Fano core above bound");
        }
    }
    if (g.levels.empty())
        return;
    const auto ex = Extractor::from_grammar(g, kDefaultLgK);
    std::mt19937_64 rng(text.size());
    const std::size_t limit = (std::size_t{1} << kDefaultLgK) - 1;
    for (std::size_t j = 0; j < g.depth(); ++j) {
        const std::size_t rules = g.levels[j].rule_count();
        const bool all = rules <= 4096;
        const std::size_t probes = all ? rules : 4096;
        for (std::size_t p = 0; p < probes; ++p) {
            const std::size_t r = all ? p : rng() % rules;
            std::size_t back = 0;
            ex.expand_rule(j, r, &back);
            ++log.rules_probed;
            log.max_backtrack = std::max(log.max_backtrack, back);
            if (back > limit)
                log.fail(tag + ": backtrack depth " + std::to_string(back));
        }
    }
}

Grammar compress_checked(const Bytes& text)
{
    CompressTrace trace;
    auto g = compress(text, &trace);
    check_structure(text, g, trace);
    return g;
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int g_failures = 0;

void report(const std::string& name, const std::function<Outcome()>& body)
{
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs", seconds_since(t0));
    std::printf("%s %s: %s [%s]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), buf);
    std::fflush(stdout);
    if (!o.pass)
        ++g_failures;
}

std::size_t log_uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    std::uniform_real_distribution<double> u(std::log(double(lo)), std::log(double(hi)));
    return std::clamp<std::size_t>(static_cast<std::size_t>(std::exp(u(rng))), lo, hi);
}

std::vector<Bytes> structured_texts()
{
    std::vector<Bytes> out;
    for (std::size_t n : {1000u, 4181u, 10000u, 46368u, 200000u, 1000000u})
        out.push_back(oracle::fibonacci(n));
    for (std::size_t n : {1u, 2u, 1000u, 65536u, 500000u})
        out.push_back(Bytes(n, 'a'));
    for (const auto& [period, n] : std::vector<std::pair<std::string, std::size_t>>{
             {"ab", 10001}, {"abc", 30000}, {"abcabd", 9000}, {"aab", 77777}, {"mississippi", 100000},
             {"0123456789abcdef", 250000}, {"xyzzy", 123457}, {"ba", 999983}, {"tttttttttg", 500000}})
        out.push_back(oracle::periodic(period, n));
    return out;
}

Outcome round_trip()
{
    std::size_t binary = 0, random = 0, structured = 0, bytes = 0;
    for (const auto& s : oracle::all_binary(12)) {
        if (decompress(compress_checked(s)) != s)
            return {false, "binary string mismatch"};
        ++binary;
    }
    std::mt19937_64 rng(2024);
    const unsigned alphabets[] = {2, 4, 16, 256};
    for (int i = 0; i < 200; ++i) {
        const auto s = random_text(log_uniform(rng, 1000, 1000000), alphabets[i % 4], rng());
        const auto g = compress_checked(s);
        if (decompress(g) != s)
            return {false, "random text mismatch, alphabet " + std::to_string(alphabets[i % 4])};
        if (i % 10 == 0 && decompress(deserialize(serialize(g, Profile::S8B)).grammar) != s)
            return {false, "random text mismatch through container"};
        ++random;
        bytes += s.size();
    }
    for (const auto& s : structured_texts()) {
        const auto g = compress_checked(s);
        if (decompress(g) != s || decompress(deserialize(serialize(g, Profile::EF)).grammar) != s)
            return {false, "structured text mismatch"};
        ++structured;
        bytes += s.size();
    }
    std::ostringstream d;
    d << binary << " binary strings, " << random << " random and " << structured << " structured texts (" << bytes
      << " bytes) restored exactly";
    return {true, d.str()};
}

Outcome extraction()
{
    std::mt19937_64 rng(77);
    std::vector<std::pair<std::string, Bytes>> texts;
    texts.emplace_back("repetitive 1000x10KB", gen_repetitive(random_text(10240, 256, 1), 1000, 0.001, 2));
    texts.emplace_back("random sigma=2", random_text(1000000, 2, 3));
    texts.emplace_back("random sigma=4", random_text(200000, 4, 4));
    texts.emplace_back("random sigma=16", random_text(300000, 16, 5));
    texts.emplace_back("random sigma=256", random_text(100000, 256, 6));
    texts.emplace_back("fibonacci", oracle::fibonacci(300000));
    texts.emplace_back("periodic", oracle::periodic("abcde", 100000));
    texts.emplace_back("all equal", Bytes(50000, 'q'));
    texts.emplace_back("repetitive 100x1KB", gen_repetitive(random_text(1000, 4, 7), 100, 0.01, 8));
    texts.emplace_back("banana", oracle::bytes("banana"));

    constexpr std::size_t kQueries = 10000;
    constexpr std::size_t kMaxLen = 1 << 14;
    std::size_t total_bytes = 0;
    for (const auto& [name, s] : texts) {
        const auto container = serialize(compress_checked(s), Profile::EF);
        const Extractor ex(deserialize(container, false));
        for (std::size_t q = 0; q < kQueries; ++q) {
            const std::uint64_t l = 1 + rng() % s.size();
            const std::uint64_t len = log_uniform(rng, 1, std::min<std::size_t>(kMaxLen, s.size() - l + 1));
            const std::uint64_t r = l + len - 1;
            ExtractTrace trace;
            const auto got = ex.extract(l, r, &trace);
            if (!std::equal(got.begin(), got.end(), s.begin() + static_cast<std::ptrdiff_t>(l - 1)) || got.size() != len)
                return {false, name + ": wrong slice for " + std::to_string(l) + "," + std::to_string(r)};
            for (const auto& w : trace.windows) {
                if (w.start > l - 1 || w.end < r)
                    return {false, name + ": window lost the query range"};
            }
            if (trace.max_backtrack > (std::size_t{1} << kDefaultLgK) - 1)
                return {false, name + ": backtrack too deep"};
            // children are at least one byte long
            if (trace.last_child - trace.first_child + 1 > len + 2)
                return {false, name + ": too many start children"};
            total_bytes += len;
        }
    }
    std::ostringstream d;
    d << texts.size() << " texts x " << kQueries << " queries (" << total_bytes << " bytes) matched the plaintext";
    return {true, d.str()};
}

Outcome sa_lcp()
{
    std::vector<Bytes> small = oracle::all_binary(12);
    std::mt19937_64 rng(5);
    const unsigned alphabets[] = {2, 4, 16, 256};
    for (int i = 0; i < 60; ++i)
        small.push_back(random_text(log_uniform(rng, 1, 10000), alphabets[i % 4], rng()));
    for (auto& s : structured_texts()) {
        if (s.size() <= 10000)
            small.push_back(std::move(s));
    }
    small.push_back(gen_repetitive(random_text(100, 4, 9), 100, 0.01, 10));
    small.push_back(oracle::bytes("zadcccbzadccce"));

    for (const auto& s : small) {
        const auto out = decompress_with_sa_lcp(compress_checked(s));
        const auto sa = oracle::suffix_array(s);
        if (out.text != s || out.sa != sa)
            return {false, "suffix array mismatch on a text of " + std::to_string(s.size()) + " bytes"};
        if (out.lcp != oracle::lcp_array(s, sa))
            return {false, "LCP mismatch on a text of " + std::to_string(s.size()) + " bytes"};
    }

    const auto big = gen_repetitive(random_text(10000, 16, 11), 100, 0.001, 12);
    const auto out = decompress_with_sa_lcp(compress_checked(big));
    const auto t = to_symbols<std::uint32_t>(big);
    const auto sa = sais::build_suffix_array<std::uint32_t>(std::span<const std::uint32_t>(t), kByteAlphabet);
    if (!std::equal(sa.begin(), sa.end(), out.sa.begin(), out.sa.end()))
        return {false, "suffix array of the large text differs from direct SA-IS"};
    for (std::size_t k = 0; k < 20000; ++k) {
        const std::size_t i = 1 + rng() % (sa.size() - 1);
        if (out.lcp[i] != oracle::common_prefix(big, sa[i - 1], sa[i]))
            return {false, "LCP of the large text wrong at " + std::to_string(i)};
    }
    std::ostringstream d;
    d << small.size() << " texts up to 10^4 bytes equal brute force; " << big.size()
      << "-byte text equals direct SA-IS (20000 LCP samples checked)";
    return {true, d.str()};
}

Outcome banana()
{
    const auto s = oracle::bytes("banana");
    const auto g = compress_checked(s);
    if (g != oracle::compress(s))
        return {false, "grammar differs from the brute-force construction"};
    const std::uint64_t a = 'a' + 1, n = 'n' + 1;
    if (g.depth() != 1 || g.final_string != std::vector<std::uint64_t>{3, 2, 1})
        return {false, "names are not [3,2,1]"};
    const auto rules = full_rules(g.levels[0]);
    const std::vector<std::vector<std::uint64_t>> cut{{0}, {a, n, a}, {a, n}};
    if (rules.size() != 4 || !std::equal(cut.begin(), cut.end(), rules.begin() + 1))
        return {false, "sorted cut rules are not $, ana, an"};
    if (!std::equal(g.levels[0].lcp.begin() + 1, g.levels[0].lcp.end(), std::vector<std::uint64_t>{0, 0, 2}.begin()))
        return {false, "front-coding lcp is not [0,0,2]"};
    if (build_extract_index(g).prefix_sums != std::vector<std::uint64_t>{0, 1, 3, 6, 7})
        return {false, "P_S is not [0,1,3,6,7]"};

    const auto out = decompress_with_sa_lcp(g);
    std::vector<std::uint64_t> sa1;
    for (auto p : out.sa)
        sa1.push_back(p + 1);
    const std::vector<std::uint64_t> expect_sa{7, 6, 4, 2, 1, 5, 3};
    const std::vector<std::uint64_t> expect_lcp{0, 0, 1, 3, 0, 0, 2};
    if (sa1 != expect_sa || out.sa != oracle::suffix_array(s))
        return {false, "SA is not [7,6,4,2,1,5,3]"};
    if (out.lcp != expect_lcp || out.lcp != oracle::lcp_array(s, out.sa))
        return {false, "LCP is not [0,0,1,3,0,0,2]"};
    if (Extractor::from_grammar(g).extract(3, 5) != oracle::bytes("nan"))
        return {false, "extract(3,5) is not nan"};
    return {true, "names, cut rules, lcp, P_S, SA and LCP match and agree with brute force"};
}

Outcome repetitive_ratio()
{
    const auto seed = random_text(10240, 256, 21);
    const auto text = gen_repetitive(seed, 1000, 0.001, 22);
    const auto packed = serialize(compress_checked(text), Profile::S8B);
    auto shuffled = text;
    std::mt19937_64 rng(23);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto packed_shuffled = serialize(compress(shuffled), Profile::S8B);

    const double ratio = 100.0 * packed.size() / text.size();
    const double ratio_shuffled = 100.0 * packed_shuffled.size() / shuffled.size();
    char buf[160];
    std::snprintf(buf, sizeof buf, "ratio %.2f%% (limit 10%%), shuffled %.2f%% (%.1fx, need 5x)", ratio, ratio_shuffled,
                  ratio_shuffled / ratio);
    return {ratio <= 10.0 && ratio_shuffled >= 5.0 * ratio, buf};
}

Outcome structure()
{
    auto& log = g_structure;
    std::ostringstream d;
    d << log.compressions << " compressions, " << log.levels << " levels, " << log.rules_probed
      << " rules expanded, max backtrack " << log.max_backtrack;
    if (!log.failures.empty()) {
        for (const auto& f : log.failures)
            d << "; " << f;
    }
    return {log.compressions > 0 && log.failures.empty(), d.str()};
}

Outcome linearity()
{
    const auto seed = random_text(10240, 256, 31);
    const auto small = gen_repetitive(seed, 200, 0.001, 32);
    const auto large = gen_repetitive(seed, 400, 0.001, 32);
    auto median_time = [](const Bytes& s) {
        std::vector<double> t;
        for (int run = 0; run < 3; ++run) {
            const auto t0 = Clock::now();
            const auto g = compress(s);
            t.push_back(seconds_since(t0));
            if (g.original_len != s.size())
                std::abort();
        }
        std::sort(t.begin(), t.end());
        return t[1];
    };
    const double ts = median_time(small);
    const double tl = median_time(large);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu bytes in %.3fs, %zu bytes in %.3fs, ratio %.2f (limit 2.5)", small.size(), ts,
                  large.size(), tl, tl / ts);
    return {tl <= 2.5 * ts, buf};
}

} // namespace

int main()
{
    report("round-trip identity", round_trip);
    report("extraction oracle", extraction);
    report("SA/LCP oracle", sa_lcp);
    report("banana worked trace", banana);
    report("repetitive ratio", repetitive_ratio);
    // every compression above went through the structural checks
    report("structural invariants", structure);
    report("linear compression time", linearity);
    std::printf("%d of 7 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
