#pragma once

#include <cstdint>
#include <vector>

#include "gcis/grammar.hpp"

namespace gcis {

/// Decompressed text with its suffix array and (optionally) LCP array. Both
/// arrays cover the text plus the sentinel, so sa[0] = text.size() and
/// lcp[0] = 0. Positions are 0-based.
struct SuffixArtifacts {
    std::vector<std::uint8_t> text;
    std::vector<std::uint64_t> sa;
    std::vector<std::uint64_t> lcp;
};

/// Inverts the deepest reduced string into its suffix array, then induces
/// each shallower level's suffix array while rewriting the text.
SuffixArtifacts decompress_with_sa(const Grammar& grammar);

/// As above; at level 0 the LCP values are computed alongside: LMS suffixes
/// with a sparse Phi pass, the rest during the two induction scans.
SuffixArtifacts decompress_with_sa_lcp(const Grammar& grammar);

} // namespace gcis
