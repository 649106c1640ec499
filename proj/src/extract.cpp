#include "gcis/extract.hpp"

#include <algorithm>
#include <stdexcept>

#include "gcis/errors.hpp"

namespace gcis {

Extractor::Extractor(Container container)
{
    if (container.profile != Profile::EF || !container.index)
        throw std::invalid_argument("profile lacks random access");
    original_len_ = container.grammar.original_len;
    lg_k_ = container.lg_k;
    levels_ = std::move(container.ef_levels);
    final_ = std::move(container.grammar.final_string);
    index_ = std::move(*container.index);
    prefix_len_.resize(levels_.size() + 1, 0);
    for (std::size_t j = 0; j < levels_.size(); ++j)
        prefix_len_[j + 1] = prefix_len_[j] + index_.lengths[j][0];
}

Extractor Extractor::from_grammar(const Grammar& grammar, unsigned lg_k)
{
    Container c;
    c.profile = Profile::EF;
    c.lg_k = lg_k;
    c.materialized = false;
    c.grammar.original_len = grammar.original_len;
    c.grammar.final_string = grammar.final_string;
    for (const auto& level : grammar.levels)
        c.ef_levels.push_back(encode_ef_level(level, lg_k));
    c.index = build_extract_index(grammar);
    return Extractor(std::move(c));
}

void Extractor::append_rule(std::size_t level, std::uint64_t name, std::vector<std::uint64_t>& out,
                            std::size_t& backtrack) const
{
    if (level >= levels_.size() || name >= levels_[level].rule_count())
        throw std::out_of_range("rule out of range");
    const EfLevel& rules = levels_[level];
    // rules at multiples of k store lcp 0, so the chain starts at or after base
    const std::size_t base = name & ~((std::size_t{1} << lg_k_) - 1);
    const std::size_t span = name - base + 2;
    thread_local std::vector<std::uint64_t> scratch;
    scratch.resize(2 * span);
    std::uint64_t* lcp_sums = scratch.data();
    std::uint64_t* suffix_sums = scratch.data() + span;
    rules.lcp_sums.decode_run(base, span, lcp_sums);
    std::size_t first = name - base;
    while (first > 0 && lcp_sums[first + 1] != lcp_sums[first])
        --first;
    if (lcp_sums[first + 1] != lcp_sums[first])
        throw CorruptError("missing lcp reset");
    backtrack = name - base - first;
    rules.suffix_sums.decode_run(base + first, span - first, suffix_sums);

    const std::size_t origin = out.size();
    for (std::size_t k = first; k <= name - base; ++k) {
        out.resize(origin + (lcp_sums[k + 1] - lcp_sums[k]));
        for (auto i = suffix_sums[k - first], e = suffix_sums[k - first + 1]; i < e; ++i)
            out.push_back(rules.suffixes.get(i));
    }
}

std::vector<std::uint64_t> Extractor::expand_rule(std::size_t level, std::uint64_t name, std::size_t* backtrack) const
{
    std::vector<std::uint64_t> rhs;
    std::size_t back = 0;
    append_rule(level, name, rhs, back);
    if (backtrack)
        *backtrack = back;
    return rhs;
}

std::vector<std::uint8_t> Extractor::extract(std::uint64_t l, std::uint64_t r, ExtractTrace* trace) const
{
    if (l < 1 || r < l || r > original_len_)
        throw std::out_of_range("range out of bounds");
    const std::uint64_t lo = l - 1;
    const std::uint64_t hi = r - 1;
    const auto& ps = index_.prefix_sums;

    // children k with ps[k] <= lo < ps[k + 1] and likewise for hi
    const std::size_t a = static_cast<std::size_t>(std::upper_bound(ps.begin(), ps.end(), lo) - ps.begin()) - 1;
    const std::size_t b = static_cast<std::size_t>(std::upper_bound(ps.begin(), ps.end(), hi) - ps.begin()) - 1;
    if (trace) {
        *trace = {};
        trace->first_child = a;
        trace->last_child = b;
    }

    ExpansionWindow w;
    w.level = levels_.size();
    w.has_prefix = a == 0;
    w.start = ps[a];
    w.end = ps[b + 1];
    for (std::size_t k = std::max<std::size_t>(a, 1); k <= b; ++k)
        w.symbols.push_back(final_[k - 1]);

    std::size_t backtrack = 0;
    for (std::size_t i = levels_.size(); i-- > 0;) {
        // rewrite level-(i+1) symbols into level-i symbols
        ExpansionWindow next;
        next.level = i;
        next.has_prefix = w.has_prefix;
        next.start = w.start;
        auto append = [&](std::uint64_t name) {
            append_rule(i, name, next.symbols, backtrack);
            if (trace)
                trace->max_backtrack = std::max(trace->max_backtrack, backtrack);
        };
        if (w.has_prefix)
            append(0);
        for (auto s : w.symbols)
            append(s);
        // the level-i prefix rule now sits among the symbols; what remains in
        // front of it is the combined prefix of the shallower levels
        std::size_t front = 0;
        std::uint64_t pos = next.start;
        if (next.has_prefix) {
            const std::uint64_t inner = prefix_len_[i];
            if (pos + inner <= lo) {
                pos += inner;
                next.has_prefix = false;
            }
        }
        if (!next.has_prefix) {
            while (front < next.symbols.size()) {
                const auto len = index_.symbol_length(i, next.symbols[front]);
                if (pos + len > lo)
                    break;
                pos += len;
                ++front;
            }
        }
        next.symbols.erase(next.symbols.begin(), next.symbols.begin() + static_cast<std::ptrdiff_t>(front));
        next.start = pos;

        std::uint64_t end = w.end;
        while (!next.symbols.empty()) {
            const auto len = index_.symbol_length(i, next.symbols.back());
            if (end - len <= hi)
                break;
            end -= len;
            next.symbols.pop_back();
        }
        next.end = end;
        if (next.start > lo || next.end <= hi)
            throw std::logic_error("extraction window lost the query range");
        if (trace)
            trace->windows.push_back(next);
        w = std::move(next);
    }

    if (w.has_prefix && prefix_len_[0] != 0)
        throw std::logic_error("extraction window lost the query range");
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(r - l + 1));
    for (std::uint64_t p = lo; p <= hi; ++p)
        out.push_back(static_cast<std::uint8_t>(w.symbols[p - w.start] - 1));
    return out;
}

} // namespace gcis
