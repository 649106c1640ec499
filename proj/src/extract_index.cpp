#include "gcis/extract_index.hpp"

#include "gcis/decode.hpp"

namespace gcis {

std::uint64_t ExtractIndex::prefix_length(std::size_t level) const
{
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < level; ++j)
        total += lengths[j][0];
    return total;
}

ExtractIndex build_extract_index(const Grammar& grammar)
{
    ExtractIndex index;
    std::vector<std::uint64_t> below;
    std::uint64_t combined_prefix = 0;
    for (std::size_t j = 0; j < grammar.levels.size(); ++j) {
        const auto rules = expand_level_rules(grammar.levels[j]);
        std::vector<std::uint64_t> lengths(rules.rule_count());
        for (std::size_t r = 0; r < rules.rule_count(); ++r) {
            if (j == 0) {
                lengths[r] = rules.rule_length(r);
                continue;
            }
            std::uint64_t sum = 0;
            for (std::size_t i = rules.offsets[r]; i < rules.offsets[r + 1]; ++i)
                sum += below[rules.flat.get(i)];
            lengths[r] = sum;
        }
        combined_prefix += lengths[0];
        index.lengths.emplace_back(lengths, Dac::kDefaultBlock);
        below = std::move(lengths);
    }

    if (grammar.original_len == 0 && grammar.final_string.empty()) {
        index.prefix_sums = {0, 0};
        return index;
    }
    index.prefix_sums.reserve(grammar.final_string.size() + 2);
    index.prefix_sums.push_back(0);
    index.prefix_sums.push_back(combined_prefix);
    for (auto s : grammar.final_string)
        index.prefix_sums.push_back(index.prefix_sums.back() + (grammar.levels.empty() ? 1 : below[s]));
    return index;
}

} // namespace gcis
