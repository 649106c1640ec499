#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gcis/codecs/fixed_width_array.hpp"
#include "gcis/errors.hpp"
#include "gcis/grammar.hpp"

namespace gcis {

/// Plain right-hand sides of one level: rule i occupies
/// flat[offsets[i], offsets[i + 1]).
struct DecodedLevel {
    FixedWidthArray flat;
    std::vector<std::uint64_t> offsets;

    std::size_t rule_count() const noexcept { return offsets.empty() ? 0 : offsets.size() - 1; }
    std::size_t rule_length(std::size_t r) const { return offsets[r + 1] - offsets[r]; }
};

/// Copies lcp symbols from the previous rule and appends the stored suffix.
/// Throws CorruptError("corrupt front coding") on an lcp longer than the
/// previous rule or a symbol above the level's sigma.
DecodedLevel expand_level_rules(const GrammarLevel& level);

/// Rewrites one reduced string into the next shallower level: the prefix
/// rule first, then the right-hand side of every symbol.
template <class Sym>
std::vector<Sym> rewrite_level(const DecodedLevel& rules, std::span<const Sym> upper)
{
    const std::size_t count = rules.rule_count();
    std::size_t total = rules.rule_length(0);
    for (auto s : upper) {
        if (s == 0 || s >= count)
            throw CorruptError("corrupt grammar");
        total += rules.rule_length(s);
    }
    std::vector<Sym> out;
    out.reserve(total);
    auto append = [&](std::size_t r) {
        for (std::size_t i = rules.offsets[r]; i < rules.offsets[r + 1]; ++i)
            out.push_back(static_cast<Sym>(rules.flat.get(i)));
    };
    append(0);
    for (auto s : upper)
        append(s);
    return out;
}

/// Checks that a decoded level-0 text is `original_len` shifted bytes plus
/// the sentinel and strips it back to bytes.
template <class Sym>
std::vector<std::uint8_t> level0_to_bytes(std::span<const Sym> text, std::uint64_t original_len)
{
    if (text.size() != original_len + 1 || text.back() != 0)
        throw CorruptError("corrupt grammar");
    std::vector<std::uint8_t> out(original_len);
    for (std::size_t i = 0; i < original_len; ++i) {
        if (text[i] == 0 || text[i] > 256)
            throw CorruptError("corrupt grammar");
        out[i] = static_cast<std::uint8_t>(text[i] - 1);
    }
    return out;
}

/// Level-wise decompression, deepest level first.
std::vector<std::uint8_t> decompress(const Grammar& grammar);

} // namespace gcis
