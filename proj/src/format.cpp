#include "gcis/format.hpp"

#include <algorithm>
#include <stdexcept>

#include "gcis/codecs/bytes.hpp"
#include "gcis/codecs/simple8b.hpp"
#include "gcis/decode.hpp"
#include "gcis/errors.hpp"

namespace gcis {

namespace {

constexpr std::uint8_t kMagic[4] = {0x47, 0x43, 0x49, 0x53};

template <class Fn>
void put_block(ByteWriter& out, Fn&& fill)
{
    ByteWriter payload;
    fill(payload);
    payload.pad_to_8();
    out.put_u64(payload.size());
    out.put_bytes(payload.bytes());
}

std::span<const std::uint8_t> get_block(ByteReader& in)
{
    const std::uint64_t len = in.get_u64();
    if (len % 8 != 0)
        throw FormatError(FormatError::Kind::Malformed, "misaligned block");
    if (len > in.remaining())
        throw FormatError(FormatError::Kind::Truncated, "truncated container");
    return in.get_bytes(static_cast<std::size_t>(len));
}

std::vector<std::uint64_t> block_words(std::span<const std::uint8_t> block)
{
    ByteReader r(block);
    return r.get_words(block.size() / 8);
}

void require_end(const ByteReader& r)
{
    if (!r.at_end())
        throw FormatError(FormatError::Kind::Malformed, "trailing bytes in block");
}

std::vector<std::uint64_t> prefix_sums(std::span<const std::uint64_t> values)
{
    std::vector<std::uint64_t> sums(values.size() + 1, 0);
    for (std::size_t i = 0; i < values.size(); ++i)
        sums[i + 1] = sums[i] + values[i];
    return sums;
}

std::vector<std::uint64_t> differences(const EliasFano& sums)
{
    std::vector<std::uint64_t> out(sums.size() - 1);
    std::uint64_t prev = sums[0];
    for (std::size_t i = 1; i < sums.size(); ++i) {
        const std::uint64_t cur = sums[i];
        out[i - 1] = cur - prev;
        prev = cur;
    }
    return out;
}

void write_s8b_level(ByteWriter& out, const GrammarLevel& level)
{
    out.put_u64(level.sigma);
    out.put_u64(level.rule_count());
    put_block(out, [&](ByteWriter& w) { w.put_words(simple8b::encode(level.lcp).words); });
    put_block(out, [&](ByteWriter& w) { w.put_words(simple8b::encode(level.suffix_len).words); });
    put_block(out, [&](ByteWriter& w) { w.put_words(FixedWidthArray::pack(level.suffix, level.sigma).words()); });
}

void write_ef_level(ByteWriter& out, const EfLevel& level)
{
    out.put_u64(level.sigma);
    out.put_u64(level.rule_count());
    put_block(out, [&](ByteWriter& w) { level.lcp_sums.write(w); });
    put_block(out, [&](ByteWriter& w) { level.suffix_sums.write(w); });
    put_block(out, [&](ByteWriter& w) { w.put_words(level.suffixes.words()); });
}

FixedWidthArray read_symbols(std::span<const std::uint8_t> block, std::size_t count, std::uint64_t sigma)
{
    const unsigned width = width_for_sigma(sigma);
    if (block.size() / 8 != words_for_bits(count * width))
        throw FormatError(FormatError::Kind::Malformed, "symbol block size mismatch");
    auto words = block_words(block);
    auto arr = FixedWidthArray::from_words(std::move(words), count, width);
    for (std::size_t i = 0; i < count; ++i) {
        if (arr.get(i) > sigma)
            throw FormatError(FormatError::Kind::Malformed, "symbol above sigma");
    }
    return arr;
}

std::vector<std::uint64_t> unpack(const FixedWidthArray& arr)
{
    std::vector<std::uint64_t> out(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        out[i] = arr.get(i);
    return out;
}

std::vector<std::uint64_t> decode_s8b(std::span<const std::uint8_t> block, std::size_t count)
{
    try {
        return simple8b::decode({block_words(block), count});
    } catch (const FormatError&) {
        throw;
    } catch (const CorruptError& e) {
        throw FormatError(FormatError::Kind::Malformed, e.what());
    }
}

EliasFano read_sums(std::span<const std::uint8_t> block, std::size_t rules)
{
    ByteReader r(block);
    auto ef = EliasFano::read(r);
    require_end(r);
    if (ef.size() != rules + 1 || ef[0] != 0)
        throw FormatError(FormatError::Kind::Malformed, "prefix sum block mismatch");
    return ef;
}

struct Parsed {
    Container container;
    ContainerInfo info;
};

Parsed parse(std::span<const std::uint8_t> bytes, bool materialize)
{
    Parsed p;
    Container& c = p.container;
    ContainerInfo& info = p.info;
    ByteReader in(bytes);

    if (bytes.size() < 4 || !std::equal(kMagic, kMagic + 4, bytes.begin()))
        throw FormatError(FormatError::Kind::BadMagic, "not a GCIS container");
    in.get_bytes(4);
    if (in.get_u8() != kFormatVersion)
        throw FormatError(FormatError::Kind::BadVersion, "unsupported container version");
    const std::uint8_t profile = in.get_u8();
    if (profile > 1)
        throw FormatError(FormatError::Kind::BadProfile, "unknown codec profile");
    c.profile = static_cast<Profile>(profile);
    const std::uint8_t flags = in.get_u8();
    if ((flags >> 4) != 0 || in.get_u8() != 0)
        throw FormatError(FormatError::Kind::Malformed, "reserved header bits set");
    c.lg_k = flags & 0x0F;
    c.grammar.original_len = in.get_u64();
    const std::uint32_t depth = in.get_u32();
    if (in.get_u32() != 0)
        throw FormatError(FormatError::Kind::Malformed, "reserved header bits set");
    const bool ef = c.profile == Profile::EF;
    c.materialized = !ef || materialize;

    info.profile = c.profile;
    info.lg_k = c.lg_k;
    info.original_len = c.grammar.original_len;
    info.levels.resize(depth);
    c.grammar.levels.resize(c.materialized ? depth : 0);
    if (ef)
        c.ef_levels.resize(depth);

    for (std::size_t j = depth; j-- > 0;) {
        const std::size_t begin = in.position();
        LevelBlockSizes& sizes = info.levels[j];
        try {
            sizes.sigma = in.get_u64();
            sizes.rules = in.get_u64();
            if (sizes.rules == 0 || sizes.rules > in.remaining())
                throw FormatError(FormatError::Kind::Malformed, "bad rule count");
            const auto w = get_block(in);
            const auto z = get_block(in);
            const auto y = get_block(in);
            sizes.w_bytes = w.size();
            sizes.z_bytes = z.size();
            sizes.y_bytes = y.size();
            sizes.overhead_bytes = in.position() - begin - w.size() - z.size() - y.size();

            if (!ef) {
                GrammarLevel& level = c.grammar.levels[j];
                level.sigma = sizes.sigma;
                level.lcp = decode_s8b(w, sizes.rules);
                level.suffix_len = decode_s8b(z, sizes.rules);
                std::uint64_t total = 0;
                for (auto len : level.suffix_len) {
                    total += len;
                    if (total > y.size() * 8)
                        throw FormatError(FormatError::Kind::Malformed, "suffix lengths exceed block");
                }
                level.suffix = unpack(read_symbols(y, total, sizes.sigma));
            } else {
                EfLevel& level = c.ef_levels[j];
                level.sigma = sizes.sigma;
                level.lcp_sums = read_sums(w, sizes.rules);
                level.suffix_sums = read_sums(z, sizes.rules);
                const std::uint64_t total = level.suffix_sums[sizes.rules];
                if (total > y.size() * 8)
                    throw FormatError(FormatError::Kind::Malformed, "suffix lengths exceed block");
                level.suffixes = read_symbols(y, total, sizes.sigma);
                if (c.materialized)
                    c.grammar.levels[j] = decode_ef_level(level);
            }
        } catch (const FormatError& e) {
            if (e.kind() == FormatError::Kind::Truncated)
                throw FormatError(FormatError::Kind::TruncatedLevel, "truncated level");
            throw;
        } catch (const CorruptError& e) {
            throw FormatError(FormatError::Kind::Malformed, e.what());
        }
    }

    const std::size_t final_begin = in.position();
    const std::uint64_t final_sigma = in.get_u64();
    const std::uint64_t final_len = in.get_u64();
    if (final_len > in.remaining() * 8)
        throw FormatError(FormatError::Kind::Truncated, "truncated container");
    c.grammar.final_string = unpack(read_symbols(get_block(in), final_len, final_sigma));
    info.final_sigma = final_sigma;
    info.final_len = final_len;
    info.final_bytes = in.position() - final_begin;

    if (ef) {
        ExtractIndex index;
        info.length_bytes.resize(depth);
        for (std::size_t j = depth; j-- > 0;) {
            const std::size_t begin = in.position();
            ByteReader r(get_block(in));
            Dac lengths;
            try {
                lengths = Dac::read(r, Dac::kDefaultBlock);
            } catch (const FormatError&) {
                throw;
            } catch (const std::exception& e) {
                throw FormatError(FormatError::Kind::Malformed, e.what());
            }
            require_end(r);
            if (lengths.size() != info.levels[j].rules)
                throw FormatError(FormatError::Kind::Malformed, "length table size mismatch");
            index.lengths.insert(index.lengths.begin(), std::move(lengths));
            info.length_bytes[j] = in.position() - begin;
        }
        const std::size_t begin = in.position();
        ByteReader r(get_block(in));
        const std::uint64_t count = r.get_u64();
        if (count != final_len + 2 || count > r.remaining() / 8)
            throw FormatError(FormatError::Kind::Malformed, "prefix sum table size mismatch");
        index.prefix_sums = r.get_words(count);
        require_end(r);
        if (index.prefix_sums[0] != 0 || !std::is_sorted(index.prefix_sums.begin(), index.prefix_sums.end()) ||
            index.prefix_sums.back() != (final_len == 0 ? 0 : c.grammar.original_len + 1))
            throw FormatError(FormatError::Kind::Malformed, "bad prefix sums");
        info.prefix_sum_bytes = in.position() - begin;
        c.index = std::move(index);
    }
    if (!in.at_end())
        throw FormatError(FormatError::Kind::Malformed, "trailing bytes after container");
    return p;
}

} // namespace

EfLevel encode_ef_level(const GrammarLevel& level, unsigned lg_k)
{
    const auto rules = expand_level_rules(level);
    const std::size_t count = rules.rule_count();
    const std::size_t k = std::size_t{1} << lg_k;

    std::vector<std::uint64_t> lcp(count);
    std::vector<std::uint64_t> suffix_len(count);
    std::vector<std::uint64_t> suffix;
    suffix.reserve(level.suffix.size());
    for (std::size_t r = 0; r < count; ++r) {
        lcp[r] = r % k == 0 ? 0 : level.lcp[r];
        suffix_len[r] = rules.rule_length(r) - lcp[r];
        for (std::size_t i = rules.offsets[r] + lcp[r]; i < rules.offsets[r + 1]; ++i)
            suffix.push_back(rules.flat.get(i));
    }

    EfLevel out;
    out.sigma = level.sigma;
    const auto lcp_sums = prefix_sums(lcp);
    const auto suffix_sums = prefix_sums(suffix_len);
    out.lcp_sums = EliasFano(lcp_sums, lcp_sums.back() + 1);
    out.suffix_sums = EliasFano(suffix_sums, suffix_sums.back() + 1);
    out.suffixes = FixedWidthArray::pack(suffix, level.sigma);
    return out;
}

GrammarLevel decode_ef_level(const EfLevel& level)
{
    const std::size_t count = level.rule_count();
    const auto lcp = differences(level.lcp_sums);
    const auto suffix_len = differences(level.suffix_sums);

    GrammarLevel out;
    out.sigma = level.sigma;
    out.lcp.resize(count);
    out.suffix_len.resize(count);
    std::vector<std::uint64_t> prev;
    std::vector<std::uint64_t> cur;
    std::size_t read = 0;
    for (std::size_t r = 0; r < count; ++r) {
        if (lcp[r] > prev.size() || (r == 0 && lcp[r] != 0))
            throw CorruptError("corrupt front coding");
        cur.assign(prev.begin(), prev.begin() + static_cast<std::ptrdiff_t>(lcp[r]));
        for (std::size_t i = 0; i < suffix_len[r]; ++i)
            cur.push_back(level.suffixes.get(read++));
        std::size_t common = 0;
        if (r >= 2) {
            const std::size_t lim = std::min(prev.size(), cur.size());
            while (common < lim && prev[common] == cur[common])
                ++common;
        }
        out.lcp[r] = common;
        out.suffix_len[r] = cur.size() - common;
        out.suffix.insert(out.suffix.end(), cur.begin() + static_cast<std::ptrdiff_t>(common), cur.end());
        prev.swap(cur);
    }
    return out;
}

std::size_t ContainerInfo::total() const noexcept
{
    std::size_t sum = header_bytes + final_bytes + prefix_sum_bytes;
    for (const auto& l : levels)
        sum += l.total();
    for (auto b : length_bytes)
        sum += b;
    return sum;
}

std::vector<std::uint8_t> serialize(const Grammar& grammar, Profile profile, unsigned lg_k)
{
    if (lg_k > 15)
        throw std::invalid_argument("lg k must fit in four bits");
    if (grammar.depth() > UINT32_MAX)
        throw std::invalid_argument("too many levels");

    ByteWriter out;
    for (auto b : kMagic)
        out.put_u8(b);
    out.put_u8(kFormatVersion);
    out.put_u8(static_cast<std::uint8_t>(profile));
    out.put_u8(static_cast<std::uint8_t>(lg_k));
    out.put_u8(0);
    out.put_u64(grammar.original_len);
    out.put_u32(static_cast<std::uint32_t>(grammar.depth()));
    out.put_u32(0);

    for (std::size_t j = grammar.depth(); j-- > 0;) {
        if (profile == Profile::S8B)
            write_s8b_level(out, grammar.levels[j]);
        else
            write_ef_level(out, encode_ef_level(grammar.levels[j], lg_k));
    }

    const std::uint64_t final_sigma = grammar.final_sigma();
    out.put_u64(final_sigma);
    out.put_u64(grammar.final_string.size());
    put_block(out, [&](ByteWriter& w) { w.put_words(FixedWidthArray::pack(grammar.final_string, final_sigma).words()); });

    if (profile == Profile::EF) {
        const auto index = build_extract_index(grammar);
        for (std::size_t j = grammar.depth(); j-- > 0;)
            put_block(out, [&](ByteWriter& w) { index.lengths[j].write(w); });
        put_block(out, [&](ByteWriter& w) {
            w.put_u64(index.prefix_sums.size());
            w.put_words(index.prefix_sums);
        });
    }
    return out.take();
}

Container deserialize(std::span<const std::uint8_t> bytes, bool materialize)
{
    return std::move(parse(bytes, materialize).container);
}

ContainerInfo inspect(std::span<const std::uint8_t> bytes)
{
    return std::move(parse(bytes, false).info);
}

} // namespace gcis
