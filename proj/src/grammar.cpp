#include "gcis/grammar.hpp"

#include <algorithm>
#include <limits>

#include "gcis/errors.hpp"
#include "gcis/sais.hpp"
#include "gcis/textcore.hpp"

namespace gcis {

std::uint64_t Grammar::final_sigma() const noexcept
{
    if (!levels.empty())
        return levels.back().rule_count() - 1;
    return final_string.empty() ? 0 : *std::max_element(final_string.begin(), final_string.end());
}

template <class Index>
ReducedLevel<Index> reduce_level(std::span<const Index> text, std::uint64_t sigma)
{
    const auto types = classify_types(text);
    const auto factors = lms_factorize<Index>(types);
    const auto alphabet = static_cast<std::size_t>(sigma) + 1;
    const auto sorted = sais::sort_lms_substrings<Index>(text, alphabet, types);
    auto naming = sais::name_lms<Index>(text, types, std::span<const Index>(sorted), factors);

    ReducedLevel<Index> out;
    GrammarLevel& level = out.level;
    level.sigma = sigma;
    const std::size_t rules = naming.rule_begin.size() + 1;
    level.lcp.reserve(rules);
    level.suffix_len.reserve(rules);

    level.lcp.push_back(0);
    level.suffix_len.push_back(factors.prefix_len());
    level.suffix.assign(text.begin(), text.begin() + factors.prefix_len());

    for (std::size_t r = 0; r + 1 < rules; ++r) {
        const std::size_t lcp = naming.sorted_lcp[r];
        const std::size_t begin = naming.rule_begin[r] + lcp;
        const std::size_t end = naming.rule_end[r];
        level.lcp.push_back(lcp);
        level.suffix_len.push_back(end - begin);
        level.suffix.insert(level.suffix.end(), text.begin() + begin, text.begin() + end);
    }
    out.reduced = std::move(naming.names);
    out.sigma_next = naming.sigma_next;
    return out;
}

template ReducedLevel<std::uint32_t> reduce_level(std::span<const std::uint32_t>, std::uint64_t);
template ReducedLevel<std::uint64_t> reduce_level(std::span<const std::uint64_t>, std::uint64_t);

namespace {

template <class Index>
Grammar compress_impl(std::span<const std::uint8_t> bytes, CompressTrace* trace)
{
    Grammar g;
    g.original_len = bytes.size();
    std::vector<Index> text = to_symbols<Index>(bytes);
    std::uint64_t sigma = *std::max_element(text.begin(), text.end());

    // texts shorter than 3 symbols have no LMS position besides the sentinel
    while (text.size() >= 3) {
        auto step = reduce_level<Index>(std::span<const Index>(text), sigma);
        if (trace) {
            LevelTrace t;
            t.text_len = text.size();
            t.sigma = sigma;
            t.reduced_len = step.reduced.size();
            t.distinct = step.sigma_next;
            for (std::size_t r = 0; r < step.level.rule_count(); ++r) {
                t.lcp_sum += step.level.lcp[r];
                t.suffix_sum += step.level.suffix_len[r];
            }
            trace->levels.push_back(t);
        }
        g.levels.push_back(std::move(step.level));
        text = std::move(step.reduced);
        sigma = step.sigma_next;
        if (sigma == text.size())
            break;
    }
    g.final_string.assign(text.begin(), text.end());
    return g;
}

} // namespace

Grammar compress(std::span<const std::uint8_t> bytes, CompressTrace* trace)
{
    if (bytes.empty())
        return Grammar{};
    if (bytes.size() < std::numeric_limits<std::int32_t>::max())
        return compress_impl<std::uint32_t>(bytes, trace);
    return compress_impl<std::uint64_t>(bytes, trace);
}

std::vector<std::vector<std::uint64_t>> full_rules(const GrammarLevel& level)
{
    std::vector<std::vector<std::uint64_t>> rules(level.rule_count());
    std::size_t offset = 0;
    for (std::size_t r = 0; r < level.rule_count(); ++r) {
        if (r > 0 && level.lcp[r] > rules[r - 1].size())
            throw CorruptError("corrupt front coding");
        if (r == 0 && level.lcp[r] != 0)
            throw CorruptError("corrupt front coding");
        if (level.suffix_len[r] > level.suffix.size() - offset)
            throw CorruptError("corrupt front coding");
        if (r > 0)
            rules[r].assign(rules[r - 1].begin(), rules[r - 1].begin() + level.lcp[r]);
        rules[r].insert(rules[r].end(), level.suffix.begin() + offset, level.suffix.begin() + offset + level.suffix_len[r]);
        offset += level.suffix_len[r];
    }
    return rules;
}

} // namespace gcis
