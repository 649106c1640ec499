#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gcis {

/// Front-coded rules of one recursion level. Rule 0 is the prefix rule (the
/// part of the level text before its first LMS position); rule i >= 1 is the
/// rule named i. Each rule is stored as (lcp with the previous rule, suffix).
struct GrammarLevel {
    /// Largest symbol value that may appear on a right-hand side.
    std::uint64_t sigma = 0;
    std::vector<std::uint64_t> lcp;
    std::vector<std::uint64_t> suffix_len;
    /// All suffixes concatenated in rule order.
    std::vector<std::uint64_t> suffix;

    std::size_t rule_count() const noexcept { return lcp.size(); }

    friend bool operator==(const GrammarLevel&, const GrammarLevel&) = default;
};

/// The start rule is implicit: the text is the expansion of the prefix rules
/// of every level followed by the expansion of final_string.
struct Grammar {
    std::uint64_t original_len = 0;
    /// levels[j] maps level-(j+1) names to level-j symbols; level 0 symbols are
    /// shifted bytes plus the sentinel.
    std::vector<GrammarLevel> levels;
    /// The last reduced string. With no levels it is the level-0 text itself
    /// (empty for empty input).
    std::vector<std::uint64_t> final_string;

    std::size_t depth() const noexcept { return levels.size(); }
    /// Largest symbol value of final_string's alphabet.
    std::uint64_t final_sigma() const noexcept;

    friend bool operator==(const Grammar&, const Grammar&) = default;
};

struct LevelTrace {
    std::uint64_t text_len = 0;
    std::uint64_t sigma = 0;
    std::uint64_t reduced_len = 0;
    std::uint64_t distinct = 0;
    std::uint64_t lcp_sum = 0;
    std::uint64_t suffix_sum = 0;
};

/// Per-level sizes observed while compressing.
struct CompressTrace {
    std::vector<LevelTrace> levels;
};

template <class Index>
struct ReducedLevel {
    GrammarLevel level;
    std::vector<Index> reduced;
    Index sigma_next = 0;
};

/// One recursion step: factorizes `text` at its LMS positions, names the
/// factors and front-codes the sorted distinct factors. `sigma` is the
/// largest symbol value in `text`.
template <class Index>
ReducedLevel<Index> reduce_level(std::span<const Index> text, std::uint64_t sigma);

extern template ReducedLevel<std::uint32_t> reduce_level(std::span<const std::uint32_t>, std::uint64_t);
extern template ReducedLevel<std::uint64_t> reduce_level(std::span<const std::uint64_t>, std::uint64_t);

/// Builds the grammar, recursing while the reduced string has repeated names.
Grammar compress(std::span<const std::uint8_t> bytes, CompressTrace* trace = nullptr);

/// Full right-hand sides of a level, reconstructed from the front coding.
std::vector<std::vector<std::uint64_t>> full_rules(const GrammarLevel& level);

} // namespace gcis
