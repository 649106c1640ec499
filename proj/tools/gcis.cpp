// gcis: command-line front end for the grammar compressor.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gcis/corpus.hpp"
#include "gcis/decode.hpp"
#include "gcis/errors.hpp"
#include "gcis/extract.hpp"
#include "gcis/format.hpp"
#include "gcis/grammar.hpp"
#include "gcis/salcp.hpp"

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoError("cannot read " + path);
    return data;
}

void write_file(const std::string& path, std::span<const std::uint8_t> data)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out)
        throw IoError("cannot write " + path);
}

// 64-bit little-endian values; the sentinel entry at index 0 is dropped
void write_array(const std::string& path, const std::vector<std::uint64_t>& values)
{
    std::vector<std::uint8_t> bytes;
    bytes.reserve(values.empty() ? 0 : (values.size() - 1) * 8);
    for (std::size_t i = 1; i < values.size(); ++i) {
        for (int b = 0; b < 8; ++b)
            bytes.push_back(static_cast<std::uint8_t>(values[i] >> (8 * b)));
    }
    write_file(path, bytes);
}

std::uint64_t peak_rss_bytes()
{
    rusage usage{};
    if (getrusage(RUSAGE_SELF, &usage) != 0)
        return 0;
    return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;
}

struct BenchRecord {
    std::string name;
    std::uint64_t input_bytes = 0;
    std::uint64_t output_bytes = 0;
    double seconds = 0;

    double ratio() const { return input_bytes == 0 ? 0.0 : 100.0 * output_bytes / input_bytes; }
    double throughput() const { return seconds <= 0 ? 0.0 : input_bytes / seconds / 1e6; }
};

void print_record(const BenchRecord& r, bool header)
{
    if (header)
        std::cout << "input,input_bytes,output_bytes,ratio_pct,time_s,throughput_mb_s,peak_rss_bytes\n";
    std::printf("%s,%llu,%llu,%.4f,%.6f,%.3f,%llu\n", r.name.c_str(), static_cast<unsigned long long>(r.input_bytes),
                static_cast<unsigned long long>(r.output_bytes), r.ratio(), r.seconds, r.throughput(),
                static_cast<unsigned long long>(peak_rss_bytes()));
    std::fflush(stdout);
}

gcis::Profile parse_profile(const std::string& name)
{
    return name == "ef" ? gcis::Profile::EF : gcis::Profile::S8B;
}

BenchRecord compress_file(const std::string& in_path, gcis::Profile profile, std::vector<std::uint8_t>& container)
{
    const auto input = read_file(in_path);
    const auto t0 = std::chrono::steady_clock::now();
    const auto grammar = gcis::compress(input);
    container = gcis::serialize(grammar, profile);
    const auto t1 = std::chrono::steady_clock::now();
    return {in_path, input.size(), container.size(), std::chrono::duration<double>(t1 - t0).count()};
}

std::pair<std::uint64_t, std::uint64_t> parse_query(const std::string& q)
{
    const auto comma = q.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("-q", "expected l,r");
    const auto l = std::stoull(q.substr(0, comma));
    const auto r = std::stoull(q.substr(comma + 1));
    return {l, r};
}

const char* profile_name(gcis::Profile p)
{
    return p == gcis::Profile::EF ? "ef" : "s8b";
}

void print_info(const gcis::ContainerInfo& info, std::size_t file_bytes)
{
    std::cout << "profile: " << profile_name(info.profile) << "\n";
    if (info.profile == gcis::Profile::EF)
        std::cout << "lcp reset period: " << (1u << info.lg_k) << "\n";
    std::cout << "text bytes: " << info.original_len << "\n";
    std::cout << "levels: " << info.levels.size() << "\n";
    std::cout << "header bytes: " << info.header_bytes << "\n";
    for (std::size_t j = 0; j < info.levels.size(); ++j) {
        const auto& l = info.levels[j];
        std::cout << "level " << j << ": sigma=" << l.sigma << " rules=" << l.rules << " W=" << l.w_bytes
                  << " Z=" << l.z_bytes << " Y=" << l.y_bytes << " framing=" << l.overhead_bytes << " total=" << l.total()
                  << "\n";
    }
    std::cout << "final string: length=" << info.final_len << " sigma=" << info.final_sigma << " bytes=" << info.final_bytes
              << "\n";
    for (std::size_t j = 0; j < info.length_bytes.size(); ++j)
        std::cout << "length table " << j << ": bytes=" << info.length_bytes[j] << "\n";
    if (info.profile == gcis::Profile::EF)
        std::cout << "prefix sums: bytes=" << info.prefix_sum_bytes << "\n";
    std::cout << "total bytes: " << info.total() << " (file " << file_bytes << ")\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Grammar compression by induced suffix sorting"};
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;
    std::string out_lcp;
    std::string profile = "s8b";
    bool no_header = false;
    std::vector<std::string> queries;
    std::size_t copies = 1;
    double rate = 0.0;
    std::uint64_t seed = 0;

    const auto profiles = CLI::IsMember({"s8b", "ef"});

    auto* c = app.add_subcommand("c", "compress a file");
    c->add_option("input", in_path)->required();
    c->add_option("output", out_path)->required();
    c->add_option("--profile", profile)->check(profiles);
    c->add_flag("--no-header", no_header);

    auto* d = app.add_subcommand("d", "decompress a container");
    d->add_option("input", in_path)->required();
    d->add_option("output", out_path)->required();

    auto* x = app.add_subcommand("x", "extract substrings (1-based, inclusive) from an EF container");
    x->add_option("input", in_path)->required();
    x->add_option("-q", queries, "l,r")->required();

    auto* sa = app.add_subcommand("sa", "decompress and write the suffix array");
    sa->add_option("input", in_path)->required();
    sa->add_option("output", out_path)->required();

    auto* salcp = app.add_subcommand("salcp", "decompress and write suffix and LCP arrays");
    salcp->add_option("input", in_path)->required();
    salcp->add_option("sa_output", out_path)->required();
    salcp->add_option("lcp_output", out_lcp)->required();

    auto* info = app.add_subcommand("info", "describe a container");
    info->add_option("input", in_path)->required();

    auto* gen = app.add_subcommand("gen", "generate a repetitive text from a seed file");
    gen->add_option("seed_file", in_path)->required();
    gen->add_option("output", out_path)->required();
    gen->add_option("--copies", copies)->check(CLI::PositiveNumber);
    gen->add_option("--rate", rate)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", seed);

    auto* bench = app.add_subcommand("bench", "compress in memory and report a CSV record");
    bench->add_option("input", in_path)->required();
    bench->add_option("--profile", profile)->check(profiles);
    bench->add_flag("--no-header", no_header);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*c) {
            std::vector<std::uint8_t> container;
            const auto record = compress_file(in_path, parse_profile(profile), container);
            write_file(out_path, container);
            print_record(record, !no_header);
        } else if (*d) {
            const auto container = gcis::deserialize(read_file(in_path));
            write_file(out_path, gcis::decompress(container.grammar));
        } else if (*x) {
            std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
            for (const auto& q : queries)
                ranges.push_back(parse_query(q));
            auto container = gcis::deserialize(read_file(in_path), false);
            if (container.profile != gcis::Profile::EF) {
                std::cerr << "gcis: profile lacks random access\n";
                return 1;
            }
            const gcis::Extractor extractor(std::move(container));
            for (const auto& [l, r] : ranges) {
                const auto bytes = extractor.extract(l, r);
                std::cout.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
                std::cout << '\n';
            }
        } else if (*sa) {
            const auto container = gcis::deserialize(read_file(in_path));
            write_array(out_path, gcis::decompress_with_sa(container.grammar).sa);
        } else if (*salcp) {
            const auto container = gcis::deserialize(read_file(in_path));
            const auto artifacts = gcis::decompress_with_sa_lcp(container.grammar);
            write_array(out_path, artifacts.sa);
            write_array(out_lcp, artifacts.lcp);
        } else if (*info) {
            const auto bytes = read_file(in_path);
            print_info(gcis::inspect(bytes), bytes.size());
        } else if (*gen) {
            write_file(out_path, gcis::gen_repetitive(read_file(in_path), copies, rate, seed));
        } else if (*bench) {
            std::vector<std::uint8_t> container;
            print_record(compress_file(in_path, parse_profile(profile), container), !no_header);
        }
    } catch (const gcis::CorruptError& e) {
        std::cerr << "gcis: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gcis: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
