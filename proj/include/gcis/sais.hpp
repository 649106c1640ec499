#pragma once

// Induced suffix sorting. Every routine is templated on the index type so the
// caller can pick 32-bit positions for texts below 2^31 and 64-bit ones above.
// Symbols of a text lie in [0, alphabet) and the last symbol is the unique
// smallest one.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "gcis/textcore.hpp"

namespace gcis::sais {

template <class Index>
inline constexpr Index kEmpty = std::numeric_limits<Index>::max();

/// bounds[c] is the first SA slot of the c-bucket; bounds[alphabet] = n.
template <class Index, class Sym>
std::vector<Index> bucket_bounds(std::span<const Sym> text, std::size_t alphabet)
{
    std::vector<Index> bounds(alphabet + 1, 0);
    for (auto c : text)
        ++bounds[static_cast<std::size_t>(c) + 1];
    for (std::size_t c = 1; c <= alphabet; ++c)
        bounds[c] += bounds[c - 1];
    return bounds;
}

/// Insertion frontiers of every bucket for one induction pass. Heads only
/// move right, tails only move left.
template <class Index>
struct BucketTable {
    std::vector<Index> head;
    std::vector<Index> tail;

    static BucketTable heads(const std::vector<Index>& bounds)
    {
        return {std::vector<Index>(bounds.begin(), bounds.end() - 1), {}};
    }

    static BucketTable tails(const std::vector<Index>& bounds)
    {
        return {{}, std::vector<Index>(bounds.begin() + 1, bounds.end())};
    }
};

/// Left-to-right scan placing every L-type suffix at the head of its bucket.
template <class Index, class Sym>
void induce_l(std::span<const Sym> text, const SuffixTypes& types, const std::vector<Index>& bounds, std::span<Index> sa)
{
    auto buckets = BucketTable<Index>::heads(bounds);
    for (std::size_t i = 0; i < sa.size(); ++i) {
        const Index j = sa[i];
        if (j == kEmpty<Index> || j == 0 || !types.is_l(j - 1))
            continue;
        sa[buckets.head[text[j - 1]]++] = j - 1;
    }
}

/// Right-to-left scan placing every S-type suffix at the tail of its bucket.
template <class Index, class Sym>
void induce_s(std::span<const Sym> text, const SuffixTypes& types, const std::vector<Index>& bounds, std::span<Index> sa)
{
    auto buckets = BucketTable<Index>::tails(bounds);
    for (std::size_t i = sa.size(); i-- > 0;) {
        const Index j = sa[i];
        if (j == kEmpty<Index> || j == 0 || !types.is_s(j - 1))
            continue;
        sa[--buckets.tail[text[j - 1]]] = j - 1;
    }
}

/// LMS positions (plus the sentinel) ordered by their LMS-substrings:
/// bucket placement, then one L pass and one S pass.
template <class Index, class Sym>
std::vector<Index> sort_lms_substrings(std::span<const Sym> text, std::size_t alphabet, const SuffixTypes& types)
{
    const std::size_t n = text.size();
    if (n == 1)
        return {0};
    const auto bounds = bucket_bounds<Index>(text, alphabet);
    std::vector<Index> sa(n, kEmpty<Index>);
    auto buckets = BucketTable<Index>::tails(bounds);
    for (std::size_t i = n; i-- > 1;) {
        if (types.is_lms(i))
            sa[--buckets.tail[text[i]]] = static_cast<Index>(i);
    }
    induce_l<Index>(text, types, bounds, std::span<Index>(sa));
    induce_s<Index>(text, types, bounds, std::span<Index>(sa));

    std::vector<Index> sorted;
    for (auto p : sa) {
        if (p != kEmpty<Index> && types.is_lms(p))
            sorted.push_back(p);
    }
    return sorted;
}

template <class Index, class Sym>
std::vector<Index> sort_lms_substrings(std::span<const Sym> text, std::size_t alphabet)
{
    return sort_lms_substrings<Index>(text, alphabet, classify_types(text));
}

/// Places the LMS suffixes, already in suffix order, at their bucket tails
/// and induces the full suffix array.
template <class Index, class Sym>
std::vector<Index> induce_from_sorted_lms(std::span<const Sym> text, std::size_t alphabet, const SuffixTypes& types,
                                          std::span<const Index> sorted_lms)
{
    const auto bounds = bucket_bounds<Index>(text, alphabet);
    std::vector<Index> sa(text.size(), kEmpty<Index>);
    auto buckets = BucketTable<Index>::tails(bounds);
    for (std::size_t k = sorted_lms.size(); k-- > 0;) {
        const Index p = sorted_lms[k];
        sa[--buckets.tail[text[p]]] = p;
    }
    induce_l<Index>(text, types, bounds, std::span<Index>(sa));
    induce_s<Index>(text, types, bounds, std::span<Index>(sa));
    return sa;
}

template <class Index>
struct NamingResult {
    /// Name of every factor, in text order, in [1, sigma_next].
    std::vector<Index> names;
    /// One representative factor per distinct name, in name order.
    std::vector<Index> rule_begin;
    std::vector<Index> rule_end;
    /// lcp of the cut right-hand sides of consecutive distinct rules.
    std::vector<Index> sorted_lcp;
    Index sigma_next = 0;
};

/// Names the factors: two factors share a name iff their full (overlapping)
/// LMS-substrings agree symbol by symbol and type by type. The same scan
/// yields the front-coding lcp over the cut factors.
template <class Index, class Sym>
NamingResult<Index> name_lms(std::span<const Sym> text, const SuffixTypes& types, std::span<const Index> sorted_lms,
                             const Factorization<Index>& factors)
{
    const std::size_t n = text.size();
    const std::size_t m = factors.factor_count();
    // factor starts are at least two apart, so p / 2 identifies them
    std::vector<Index> slot(n / 2 + 1, kEmpty<Index>);
    for (std::size_t k = 0; k < m; ++k)
        slot[factors.starts[k] / 2] = static_cast<Index>(k);

    auto cut_end = [&](std::size_t p) { return factors.factor_end(slot[p / 2]); };
    auto full_len = [&](std::size_t p) {
        const std::size_t k = slot[p / 2];
        return k + 1 < m ? factors.starts[k + 1] - p + 1 : n - p;
    };

    NamingResult<Index> out;
    out.names.assign(m, 0);
    Index name = 0;
    std::size_t prev = n;
    for (const Index p : sorted_lms) {
        bool fresh = prev == n;
        std::size_t lcp = 0;
        if (!fresh) {
            const std::size_t la = full_len(prev);
            const std::size_t lb = full_len(p);
            std::size_t t = 0;
            const std::size_t lim = std::min(la, lb);
            while (t < lim && text[prev + t] == text[p + t] && types.is_s(prev + t) == types.is_s(p + t))
                ++t;
            fresh = !(t == la && la == lb);
            if (fresh) {
                const std::size_t cut_lim = std::min(cut_end(prev) - prev, cut_end(p) - p);
                lcp = std::min(t, cut_lim);
                while (lcp < cut_lim && text[prev + lcp] == text[p + lcp])
                    ++lcp;
            }
        }
        if (fresh) {
            ++name;
            out.rule_begin.push_back(p);
            out.rule_end.push_back(static_cast<Index>(cut_end(p)));
            out.sorted_lcp.push_back(static_cast<Index>(lcp));
        }
        out.names[slot[p / 2]] = name;
        prev = p;
    }
    out.sigma_next = name;
    return out;
}

/// Full SA-IS: sorts LMS-substrings, recurses on the reduced string when
/// names collide, then induces every suffix.
template <class Index, class Sym>
std::vector<Index> build_suffix_array(std::span<const Sym> text, std::size_t alphabet)
{
    const std::size_t n = text.size();
    if (n == 0)
        return {};
    if (n == 1)
        return {0};
    const auto types = classify_types(text);
    const auto factors = lms_factorize<Index>(types);
    const auto sorted = sort_lms_substrings<Index>(text, alphabet, types);
    auto naming = name_lms<Index>(text, types, std::span<const Index>(sorted), factors);

    std::vector<Index> lms_order;
    if (naming.sigma_next == factors.factor_count()) {
        lms_order = sorted;
    } else {
        const auto reduced_sa =
            build_suffix_array<Index>(std::span<const Index>(naming.names), static_cast<std::size_t>(naming.sigma_next) + 1);
        lms_order.resize(reduced_sa.size());
        for (std::size_t k = 0; k < reduced_sa.size(); ++k)
            lms_order[k] = factors.starts[reduced_sa[k]];
    }
    return induce_from_sorted_lms<Index>(text, alphabet, types, std::span<const Index>(lms_order));
}

} // namespace gcis::sais
