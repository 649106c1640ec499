#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gcis {

/// Internal symbol of the virtual end marker. Byte b maps to b + 1, so level-0
/// symbols lie in [0, 256].
inline constexpr std::uint64_t kSentinel = 0;
inline constexpr std::uint64_t kByteAlphabet = 257;

/// Shifts bytes into the internal alphabet and appends the sentinel.
template <class Sym>
std::vector<Sym> to_symbols(std::span<const std::uint8_t> bytes)
{
    std::vector<Sym> text(bytes.size() + 1);
    for (std::size_t i = 0; i < bytes.size(); ++i)
        text[i] = static_cast<Sym>(bytes[i]) + 1;
    text.back() = static_cast<Sym>(kSentinel);
    return text;
}

/// L/S classification of every suffix: true = S-type.
class SuffixTypes {
public:
    SuffixTypes() = default;
    explicit SuffixTypes(std::vector<bool> bits) : bits_(std::move(bits)) {}

    std::size_t size() const noexcept { return bits_.size(); }
    bool is_s(std::size_t i) const { return bits_[i]; }
    bool is_l(std::size_t i) const { return !bits_[i]; }
    /// S-type with an L-type left neighbour. Position 0 is never LMS.
    bool is_lms(std::size_t i) const { return i > 0 && bits_[i] && !bits_[i - 1]; }

    const std::vector<bool>& bits() const noexcept { return bits_; }

private:
    std::vector<bool> bits_;
};

/// One right-to-left pass. The text must end with its unique smallest symbol.
template <class Sym>
SuffixTypes classify_types(std::span<const Sym> text)
{
    if (text.empty())
        throw std::invalid_argument("empty text");
    const std::size_t n = text.size();
    std::vector<bool> s(n);
    s[n - 1] = true;
    for (std::size_t i = n - 1; i-- > 0;)
        s[i] = text[i] < text[i + 1] || (text[i] == text[i + 1] && s[i + 1]);
    return SuffixTypes(std::move(s));
}

template <class Index = std::size_t>
std::vector<Index> lms_positions(const SuffixTypes& types)
{
    std::vector<Index> out;
    for (std::size_t i = 1; i < types.size(); ++i) {
        if (types.is_lms(i))
            out.push_back(static_cast<Index>(i));
    }
    return out;
}

/// Partition of a text into an unfactored prefix followed by factors that
/// each start at an LMS position and run up to the next one. The final
/// factor is the sentinel alone.
template <class Index = std::size_t>
struct Factorization {
    std::size_t text_len = 0;
    std::vector<Index> starts;

    std::size_t prefix_len() const noexcept { return starts.empty() ? text_len : starts.front(); }
    std::size_t factor_count() const noexcept { return starts.size(); }
    std::size_t factor_begin(std::size_t k) const { return starts[k]; }
    std::size_t factor_end(std::size_t k) const { return k + 1 < starts.size() ? starts[k + 1] : text_len; }
};

template <class Index = std::size_t>
Factorization<Index> lms_factorize(const SuffixTypes& types)
{
    Factorization<Index> f;
    f.text_len = types.size();
    f.starts = lms_positions<Index>(types);
    // the sentinel is always a factor of its own, even when it is at position 0
    if (f.text_len > 0 && (f.starts.empty() || f.starts.back() != f.text_len - 1))
        f.starts.push_back(static_cast<Index>(f.text_len - 1));
    return f;
}

} // namespace gcis
