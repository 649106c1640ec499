#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "gcis/corpus.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int status = -1;
    std::string out;
};

Result run(const std::string& args)
{
    const std::string cmd = std::string(GCIS_CLI_PATH) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<std::uint8_t> load(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void store(const fs::path& p, const std::vector<std::uint8_t>& data)
{
    std::ofstream out(p, std::ios::binary);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

std::vector<std::uint64_t> load_u64(const fs::path& p)
{
    const auto bytes = load(p);
    std::vector<std::uint64_t> out(bytes.size() / 8);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (int b = 0; b < 8; ++b)
            out[i] |= std::uint64_t{bytes[i * 8 + b]} << (8 * b);
    }
    return out;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path() / ("gcis_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string path(const std::string& name) const { return (dir / name).string(); }

    fs::path dir;
};

} // namespace

TEST_F(Cli, CompressDecompressRoundTrip)
{
    const auto text = gcis::gen_repetitive(gcis::random_text(3000, 256, 1), 20, 0.001, 2);
    store(path("in.bin"), text);
    for (const std::string profile : {"s8b", "ef"}) {
        const auto c = run("c " + path("in.bin") + " " + path("a.gcis") + " --profile " + profile);
        ASSERT_EQ(c.status, 0);
        EXPECT_NE(c.out.find("input,input_bytes"), std::string::npos);
        EXPECT_NE(c.out.find(std::to_string(text.size())), std::string::npos);
        ASSERT_EQ(run("d " + path("a.gcis") + " " + path("out.bin")).status, 0);
        EXPECT_EQ(load(path("out.bin")), text);
    }
}

TEST_F(Cli, ExtractQueries)
{
    store(path("in.txt"), oracle::bytes("banana"));
    ASSERT_EQ(run("c " + path("in.txt") + " " + path("b.gcis") + " --profile ef --no-header").status, 0);
    const auto x = run("x " + path("b.gcis") + " -q 3,5 -q 1,6");
    EXPECT_EQ(x.status, 0);
    EXPECT_EQ(x.out, "nan\nbanana\n");
    EXPECT_EQ(run("x " + path("b.gcis") + " -q 0,3").status, 1);

    const std::string dna = "AGCTTTTCATTCTGACTGCAACGGGCAATATGTCTCTGTGTGGATTAAAAAAAGAGTGTCTGATAGCAGC";
    store(path("dna.txt"), oracle::bytes(dna));
    ASSERT_EQ(run("c " + path("dna.txt") + " " + path("dna.gcis") + " --profile ef --no-header").status, 0);
    EXPECT_EQ(run("x " + path("dna.gcis") + " -q 10,34").out, dna.substr(9, 25) + "\n");
}

TEST_F(Cli, ExtractNeedsEfProfile)
{
    store(path("in.txt"), oracle::bytes("banana"));
    ASSERT_EQ(run("c " + path("in.txt") + " " + path("b.gcis") + " --profile s8b").status, 0);
    const std::string cmd = std::string(GCIS_CLI_PATH) + " x " + path("b.gcis") + " -q 1,2 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    char buf[256] = {};
    const auto got = fread(buf, 1, sizeof buf - 1, pipe);
    const int raw = pclose(pipe);
    EXPECT_EQ(WEXITSTATUS(raw), 1);
    EXPECT_NE(std::string(buf, got).find("profile lacks random access"), std::string::npos);
}

TEST_F(Cli, SuffixArrays)
{
    const auto text = gcis::random_text(3000, 4, 3);
    store(path("in.bin"), text);
    ASSERT_EQ(run("c " + path("in.bin") + " " + path("t.gcis")).status, 0);
    ASSERT_EQ(run("sa " + path("t.gcis") + " " + path("sa.bin")).status, 0);
    ASSERT_EQ(run("salcp " + path("t.gcis") + " " + path("sa2.bin") + " " + path("lcp.bin")).status, 0);

    auto sa = oracle::suffix_array(text);
    auto lcp = oracle::lcp_array(text, sa);
    sa.erase(sa.begin());
    lcp.erase(lcp.begin());
    EXPECT_EQ(load_u64(path("sa.bin")), sa);
    EXPECT_EQ(load_u64(path("sa2.bin")), sa);
    EXPECT_EQ(load_u64(path("lcp.bin")), lcp);
}

TEST_F(Cli, InfoTotalsMatchFileSize)
{
    store(path("in.bin"), gcis::random_text(5000, 16, 4));
    ASSERT_EQ(run("c " + path("in.bin") + " " + path("t.gcis") + " --profile ef").status, 0);
    const auto size = fs::file_size(path("t.gcis"));
    const auto info = run("info " + path("t.gcis"));
    EXPECT_EQ(info.status, 0);
    EXPECT_NE(info.out.find("total bytes: " + std::to_string(size) + " (file " + std::to_string(size) + ")"),
              std::string::npos);
    EXPECT_NE(info.out.find("level 0: sigma="), std::string::npos);
}

TEST_F(Cli, ExitCodes)
{
    EXPECT_EQ(run("c " + path("missing") + " " + path("o.gcis")).status, 1);
    EXPECT_EQ(run("").status, 1);
    EXPECT_EQ(run("c --profile zip a b").status, 1);
    store(path("junk.gcis"), oracle::bytes("definitely not a container"));
    EXPECT_EQ(run("d " + path("junk.gcis") + " " + path("o.bin")).status, 2);
    EXPECT_EQ(run("info " + path("junk.gcis")).status, 2);
}

TEST_F(Cli, GeneratorIsDeterministic)
{
    store(path("seed.bin"), gcis::random_text(1000, 256, 5));
    ASSERT_EQ(run("gen " + path("seed.bin") + " " + path("g1") + " --copies 5 --rate 0.01 --seed 7").status, 0);
    ASSERT_EQ(run("gen " + path("seed.bin") + " " + path("g2") + " --copies 5 --rate 0.01 --seed 7").status, 0);
    EXPECT_EQ(load(path("g1")).size(), 5000u);
    EXPECT_EQ(load(path("g1")), load(path("g2")));
    ASSERT_EQ(run("gen " + path("seed.bin") + " " + path("g3") + " --copies 1").status, 0);
    EXPECT_EQ(load(path("g3")), load(path("seed.bin")));
}

TEST_F(Cli, BenchPrintsOneRecord)
{
    store(path("in.bin"), gcis::random_text(2000, 4, 6));
    const auto b = run("bench " + path("in.bin") + " --no-header");
    EXPECT_EQ(b.status, 0);
    EXPECT_EQ(std::count(b.out.begin(), b.out.end(), '\n'), 1);
    EXPECT_EQ(std::count(b.out.begin(), b.out.end(), ','), 6);
}
