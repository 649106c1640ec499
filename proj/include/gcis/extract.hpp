#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gcis/extract_index.hpp"
#include "gcis/format.hpp"
#include "gcis/grammar.hpp"

namespace gcis {

/// State after trimming one level: `symbols` (plus the combined prefix rule in
/// front of them when has_prefix is set) generate text[start, end).
struct ExpansionWindow {
    std::size_t level = 0;
    bool has_prefix = false;
    std::vector<std::uint64_t> symbols;
    std::uint64_t start = 0;
    std::uint64_t end = 0;
};

struct ExtractTrace {
    /// Top-level child range [first_child, last_child] picked by binary search.
    std::size_t first_child = 0;
    std::size_t last_child = 0;
    /// One window per level, deepest first, after trimming.
    std::vector<ExpansionWindow> windows;
    std::size_t max_backtrack = 0;
};

/// Random access over an EF container. Immutable after construction, so
/// concurrent queries are safe.
class Extractor {
public:
    /// Throws std::invalid_argument unless the container is EF with an index.
    explicit Extractor(Container container);
    /// Builds the random-access form in memory.
    static Extractor from_grammar(const Grammar& grammar, unsigned lg_k = kDefaultLgK);

    std::uint64_t size() const noexcept { return original_len_; }
    std::size_t depth() const noexcept { return levels_.size(); }
    const ExtractIndex& index() const noexcept { return index_; }
    unsigned lg_k() const noexcept { return lg_k_; }

    /// Full right-hand side of rule `name` at `level`. Walks back to the
    /// nearest rule stored with lcp 0, then forward. Throws std::out_of_range
    /// for an unknown rule.
    std::vector<std::uint64_t> expand_rule(std::size_t level, std::uint64_t name, std::size_t* backtrack = nullptr) const;

    /// text[l, r], 1-based and inclusive. Throws
    /// std::out_of_range("range out of bounds").
    std::vector<std::uint8_t> extract(std::uint64_t l, std::uint64_t r, ExtractTrace* trace = nullptr) const;

private:
    Extractor() = default;
    void append_rule(std::size_t level, std::uint64_t name, std::vector<std::uint64_t>& out, std::size_t& backtrack) const;

    std::uint64_t original_len_ = 0;
    unsigned lg_k_ = kDefaultLgK;
    std::vector<EfLevel> levels_;
    std::vector<std::uint64_t> final_;
    ExtractIndex index_;
    std::vector<std::uint64_t> prefix_len_;
};

} // namespace gcis
