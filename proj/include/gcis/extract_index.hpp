#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gcis/codecs/dac.hpp"
#include "gcis/grammar.hpp"

namespace gcis {

/// Navigation data for random access. The start rule's children are the
/// combined prefix rules of every level (child 0) followed by the symbols of
/// the final string; prefix_sums[k] is the text offset where child k begins.
struct ExtractIndex {
    std::vector<std::uint64_t> prefix_sums;
    /// lengths[j][name] = expansion length of the level-j rule `name`.
    std::vector<Dac> lengths;

    /// Expansion length of a level-`level` symbol; level 0 symbols are
    /// terminals of length 1.
    std::uint64_t symbol_length(std::size_t level, std::uint64_t symbol) const
    {
        return level == 0 ? 1 : lengths[level - 1][symbol];
    }

    /// Length of the combined prefix seen from level `level`: the expansion of
    /// the prefix rules of levels 0 .. level-1.
    std::uint64_t prefix_length(std::size_t level) const;

    friend bool operator==(const ExtractIndex&, const ExtractIndex&) = default;
};

/// Computes every expansion length bottom-up and the partial sums over the
/// start rule's children.
ExtractIndex build_extract_index(const Grammar& grammar);

} // namespace gcis
