#include "gcis/decode.hpp"

namespace gcis {

DecodedLevel expand_level_rules(const GrammarLevel& level)
{
    const std::size_t rules = level.rule_count();
    if (level.suffix_len.size() != rules || rules == 0)
        throw CorruptError("corrupt front coding");

    std::size_t total = 0;
    std::size_t prev_len = 0;
    std::size_t stored = 0;
    for (std::size_t r = 0; r < rules; ++r) {
        if (level.lcp[r] > prev_len || (r == 0 && level.lcp[r] != 0))
            throw CorruptError("corrupt front coding");
        prev_len = level.lcp[r] + level.suffix_len[r];
        total += prev_len;
        stored += level.suffix_len[r];
    }
    if (stored != level.suffix.size())
        throw CorruptError("corrupt front coding");

    DecodedLevel out;
    out.flat = FixedWidthArray(total, width_for_sigma(level.sigma));
    out.offsets.resize(rules + 1);
    std::size_t write = 0;
    std::size_t read = 0;
    for (std::size_t r = 0; r < rules; ++r) {
        out.offsets[r] = write;
        if (r > 0) {
            const std::size_t from = out.offsets[r - 1];
            for (std::size_t i = 0; i < level.lcp[r]; ++i)
                out.flat.set(write++, out.flat.get(from + i));
        }
        for (std::size_t i = 0; i < level.suffix_len[r]; ++i) {
            const auto sym = level.suffix[read++];
            if (sym > level.sigma)
                throw CorruptError("corrupt front coding");
            out.flat.set(write++, sym);
        }
    }
    out.offsets[rules] = write;
    return out;
}

std::vector<std::uint8_t> decompress(const Grammar& grammar)
{
    if (grammar.original_len == 0 && grammar.levels.empty() && grammar.final_string.empty())
        return {};
    std::vector<std::uint64_t> text = grammar.final_string;
    for (std::size_t j = grammar.levels.size(); j-- > 0;) {
        // only the upper text and the level being produced are alive here
        const auto rules = expand_level_rules(grammar.levels[j]);
        text = rewrite_level<std::uint64_t>(rules, text);
    }
    return level0_to_bytes<std::uint64_t>(text, grammar.original_len);
}

} // namespace gcis
