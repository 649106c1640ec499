#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gcis/codecs/elias_fano.hpp"
#include "gcis/codecs/fixed_width_array.hpp"
#include "gcis/extract_index.hpp"
#include "gcis/grammar.hpp"

namespace gcis {

enum class Profile : std::uint8_t { S8B = 0, EF = 1 };

inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr unsigned kDefaultLgK = 3;
inline constexpr std::size_t kHeaderBytes = 24;

/// One level in random-access form. lcp and suffix lengths are kept as
/// Elias-Fano prefix sums so any rule's entry is two constant-time lookups.
struct EfLevel {
    std::uint64_t sigma = 0;
    EliasFano lcp_sums;
    EliasFano suffix_sums;
    FixedWidthArray suffixes;

    std::size_t rule_count() const noexcept { return lcp_sums.size() == 0 ? 0 : lcp_sums.size() - 1; }
    std::uint64_t lcp(std::size_t r) const { return lcp_sums[r + 1] - lcp_sums[r]; }
    std::uint64_t suffix_begin(std::size_t r) const { return suffix_sums[r]; }
    std::uint64_t suffix_end(std::size_t r) const { return suffix_sums[r + 1]; }
};

/// Re-front-codes `level` so that every rule whose index is a multiple of
/// 2^lg_k stores lcp 0 and its full right-hand side.
EfLevel encode_ef_level(const GrammarLevel& level, unsigned lg_k);

/// Full right-hand sides of an EF level put back into canonical front coding.
GrammarLevel decode_ef_level(const EfLevel& level);

struct Container {
    Profile profile = Profile::S8B;
    unsigned lg_k = kDefaultLgK;
    /// original_len and final_string are always set. levels are filled for
    /// S8B containers and, on request, for EF ones.
    Grammar grammar;
    bool materialized = true;
    /// EF only, indexed like grammar.levels.
    std::vector<EfLevel> ef_levels;
    std::optional<ExtractIndex> index;
};

std::vector<std::uint8_t> serialize(const Grammar& grammar, Profile profile, unsigned lg_k = kDefaultLgK);

/// Throws FormatError: BadMagic ("not a GCIS container"), BadVersion,
/// BadProfile, Truncated, TruncatedLevel ("truncated level") or Malformed.
Container deserialize(std::span<const std::uint8_t> bytes, bool materialize = true);

struct LevelBlockSizes {
    std::uint64_t sigma = 0;
    std::uint64_t rules = 0;
    std::size_t w_bytes = 0;
    std::size_t z_bytes = 0;
    std::size_t y_bytes = 0;
    /// Level header and block length prefixes.
    std::size_t overhead_bytes = 0;

    std::size_t total() const noexcept { return w_bytes + z_bytes + y_bytes + overhead_bytes; }
};

/// Byte accounting of a container; the parts add up to the file size.
struct ContainerInfo {
    Profile profile = Profile::S8B;
    unsigned lg_k = kDefaultLgK;
    std::uint64_t original_len = 0;
    std::size_t header_bytes = kHeaderBytes;
    /// Indexed by level (0 is the shallowest), although stored deepest-first.
    std::vector<LevelBlockSizes> levels;
    std::uint64_t final_sigma = 0;
    std::uint64_t final_len = 0;
    std::size_t final_bytes = 0;
    std::vector<std::size_t> length_bytes;
    std::size_t prefix_sum_bytes = 0;

    std::size_t total() const noexcept;
};

ContainerInfo inspect(std::span<const std::uint8_t> bytes);

} // namespace gcis
