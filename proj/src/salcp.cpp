#include "gcis/salcp.hpp"

#include <algorithm>
#include <limits>

#include "gcis/decode.hpp"
#include "gcis/errors.hpp"
#include "gcis/sais.hpp"
#include "gcis/textcore.hpp"

namespace gcis {

namespace {

/// Range minima of the LCP values seen since the last induction into each
/// bucket. Entries are ordered by the time of that induction, so their
/// minima never decrease towards the top and a fold only touches a suffix of
/// the stack. At most one entry per symbol.
template <class Index>
class MinStack {
public:
    void fold(Index h)
    {
        for (auto it = entries_.rbegin(); it != entries_.rend() && it->second > h; ++it)
            it->second = h;
    }

    Index query(std::uint64_t c) const
    {
        for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
            if (it->first == c)
                return it->second;
        }
        return 0;
    }

    void reset(std::uint64_t c)
    {
        auto it = std::find_if(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == c; });
        if (it != entries_.end())
            entries_.erase(it);
        entries_.emplace_back(c, std::numeric_limits<Index>::max());
    }

    void clear() { entries_.clear(); }

private:
    std::vector<std::pair<std::uint64_t, Index>> entries_;
};

template <class Index, class Sym>
Index naive_lcp(std::span<const Sym> text, std::size_t a, std::size_t b)
{
    const std::size_t n = text.size();
    std::size_t h = 0;
    while (a + h < n && b + h < n && text[a + h] == text[b + h])
        ++h;
    return static_cast<Index>(h);
}

/// Induced sorting that carries LCP values. `sorted_lms` lists every LMS
/// position (the sentinel included) in suffix order.
template <class Index, class Sym>
void induce_with_lcp(std::span<const Sym> text, std::size_t alphabet, const SuffixTypes& types,
                     std::span<const Index> sorted_lms, std::vector<Index>& sa, std::vector<Index>& lcp)
{
    constexpr Index kEmpty = sais::kEmpty<Index>;
    const std::size_t n = text.size();
    const std::size_t m = sorted_lms.size();
    sa.assign(n, kEmpty);
    lcp.assign(n, 0);

    // Sparse Phi. Two LMS positions are at least two apart, so slot m + p / 2
    // of either array is private to p and lies in the upper part.
    std::copy(sorted_lms.begin(), sorted_lms.end(), sa.begin());
    for (std::size_t k = 0; k < m; ++k)
        sa[m + sa[k] / 2] = k == 0 ? kEmpty : sa[k - 1];
    {
        std::size_t h = 0;
        std::size_t prev_p = 0;
        Index prev_q = kEmpty;
        for (std::size_t p = 1; p < n; ++p) {
            if (!types.is_lms(p))
                continue;
            const Index q = sa[m + p / 2];
            if (q == kEmpty) {
                h = 0;
            } else {
                const std::size_t d = p - prev_p;
                // the previous answer only carries over if the shifted
                // predecessor is itself one of the sorted suffixes
                if (prev_q != kEmpty && h > d && types.is_lms(prev_q + d))
                    h -= d;
                else
                    h = 0;
                while (p + h < n && q + h < n && text[p + h] == text[q + h])
                    ++h;
            }
            lcp[m + p / 2] = static_cast<Index>(h);
            prev_p = p;
            prev_q = q;
        }
    }
    for (std::size_t k = 0; k < m; ++k)
        lcp[k] = lcp[m + sa[k] / 2];
    std::fill(sa.begin() + static_cast<std::ptrdiff_t>(m), sa.end(), kEmpty);
    std::fill(lcp.begin() + static_cast<std::ptrdiff_t>(m), lcp.end(), 0);

    const auto bounds = sais::bucket_bounds<Index>(text, alphabet);
    {
        auto buckets = sais::BucketTable<Index>::tails(bounds);
        for (std::size_t k = m; k-- > 0;) {
            const Index p = sa[k];
            const Index h = lcp[k];
            sa[k] = kEmpty;
            lcp[k] = 0;
            const Index dst = --buckets.tail[text[p]];
            sa[dst] = p;
            lcp[dst] = h;
        }
    }

    MinStack<Index> stack;
    {
        auto buckets = sais::BucketTable<Index>::heads(bounds);
        for (std::size_t i = 0; i < n; ++i) {
            const Index j = sa[i];
            if (j == kEmpty)
                continue;
            const auto c = text[j];
            if (types.is_s(j) && (i == bounds[c] || sa[i - 1] == kEmpty || types.is_l(sa[i - 1]))) {
                // first LMS of its bucket: its neighbour is the bucket's last L
                lcp[i] = buckets.head[c] > bounds[c] ? naive_lcp<Index>(text, sa[buckets.head[c] - 1], j) : 0;
            }
            stack.fold(lcp[i]);
            if (j == 0 || !types.is_l(j - 1))
                continue;
            const auto c2 = text[j - 1];
            const Index pos = buckets.head[c2]++;
            sa[pos] = j - 1;
            lcp[pos] = pos == bounds[c2] ? 0 : stack.query(c2) + 1;
            stack.reset(c2);
        }
    }

    stack.clear();
    {
        auto buckets = sais::BucketTable<Index>::tails(bounds);
        for (std::size_t i = n; i-- > 0;) {
            if (i + 1 < n) {
                const Index right = sa[i + 1];
                const Index cur = sa[i];
                if (cur != kEmpty && right != kEmpty && types.is_s(right) && types.is_l(cur) && text[cur] == text[right])
                    lcp[i + 1] = naive_lcp<Index>(text, cur, right);
                stack.fold(lcp[i + 1]);
            }
            const Index j = sa[i];
            if (j == kEmpty || j == 0 || !types.is_s(j - 1))
                continue;
            const auto c2 = text[j - 1];
            const Index pos = --buckets.tail[c2];
            sa[pos] = j - 1;
            lcp[pos] = 0;
            if (static_cast<std::size_t>(pos) + 1 < bounds[c2 + 1])
                lcp[pos + 1] = stack.query(c2) + 1;
            stack.reset(c2);
        }
    }
}

template <class Index>
std::vector<Index> sorted_lms_from_sa(const std::vector<Index>& sa, const SuffixTypes& types)
{
    std::vector<Index> out;
    for (auto p : sa) {
        if (types.is_lms(p))
            out.push_back(p);
    }
    return out;
}

template <class Index>
SuffixArtifacts run(const Grammar& grammar, bool want_lcp)
{
    SuffixArtifacts out;
    if (grammar.original_len == 0 && grammar.levels.empty() && grammar.final_string.empty()) {
        out.sa = {0};
        out.lcp = {0};
        return out;
    }

    std::vector<Index> text(grammar.final_string.begin(), grammar.final_string.end());
    std::vector<Index> sa;
    std::vector<Index> lcp;
    auto finish_level0 = [&](const std::vector<Index>& sorted_lms, const SuffixTypes& types) {
        if (want_lcp)
            induce_with_lcp<Index>(std::span<const Index>(text), kByteAlphabet, types, std::span<const Index>(sorted_lms), sa, lcp);
    };

    if (grammar.levels.empty()) {
        for (auto s : text) {
            if (s >= kByteAlphabet)
                throw CorruptError("corrupt grammar");
        }
        if (text.empty() || text.back() != 0)
            throw CorruptError("corrupt grammar");
        sa = sais::build_suffix_array<Index>(std::span<const Index>(text), kByteAlphabet);
        if (want_lcp && text.size() > 1) {
            const auto types = classify_types(std::span<const Index>(text));
            finish_level0(sorted_lms_from_sa(sa, types), types);
        }
    } else {
        // the deepest reduced string has distinct names 1..n
        sa.assign(text.size(), sais::kEmpty<Index>);
        for (std::size_t i = 0; i < text.size(); ++i) {
            const Index s = text[i];
            if (s == 0 || s > text.size() || sa[s - 1] != sais::kEmpty<Index>)
                throw CorruptError("corrupt grammar");
            sa[s - 1] = static_cast<Index>(i);
        }
        for (std::size_t j = grammar.levels.size(); j-- > 0;) {
            const auto rules = expand_level_rules(grammar.levels[j]);
            auto lower = rewrite_level<Index>(rules, std::span<const Index>(text));
            if (lower.size() < 2)
                throw CorruptError("corrupt grammar");
            const auto types = classify_types(std::span<const Index>(lower));
            const auto factors = lms_factorize<Index>(types);
            if (factors.factor_count() != text.size())
                throw CorruptError("corrupt grammar");
            std::vector<Index> sorted(sa.size());
            for (std::size_t k = 0; k < sa.size(); ++k)
                sorted[k] = factors.starts[sa[k]];
            text = std::move(lower);
            if (j == 0 && want_lcp) {
                finish_level0(sorted, types);
            } else {
                const std::size_t alphabet = static_cast<std::size_t>(grammar.levels[j].sigma) + 1;
                sa = sais::induce_from_sorted_lms<Index>(std::span<const Index>(text), alphabet, types,
                                                         std::span<const Index>(sorted));
            }
        }
    }

    out.text = level0_to_bytes<Index>(std::span<const Index>(text), grammar.original_len);
    out.sa.assign(sa.begin(), sa.end());
    if (want_lcp) {
        if (lcp.empty())
            lcp.assign(sa.size(), 0);
        out.lcp.assign(lcp.begin(), lcp.end());
    }
    return out;
}

SuffixArtifacts dispatch(const Grammar& grammar, bool want_lcp)
{
    if (grammar.original_len < std::numeric_limits<std::int32_t>::max())
        return run<std::uint32_t>(grammar, want_lcp);
    return run<std::uint64_t>(grammar, want_lcp);
}

} // namespace

SuffixArtifacts decompress_with_sa(const Grammar& grammar)
{
    return dispatch(grammar, false);
}

SuffixArtifacts decompress_with_sa_lcp(const Grammar& grammar)
{
    return dispatch(grammar, true);
}

} // namespace gcis
