#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gcis {

/// Bit width used to store symbols drawn from [0, sigma]: floor(lg sigma) + 1.
inline unsigned width_for_sigma(std::uint64_t sigma) noexcept
{
    return sigma == 0 ? 1u : static_cast<unsigned>(std::bit_width(sigma));
}

/// Packed array of fixed-width unsigned cells. Cells may straddle word
/// boundaries; widths from 1 to 64 are supported.
class FixedWidthArray {
public:
    FixedWidthArray() = default;
    FixedWidthArray(std::size_t size, unsigned width);

    /// Packs `values` using width_for_sigma(sigma). Throws std::invalid_argument
    /// if a value does not fit.
    static FixedWidthArray pack(std::span<const std::uint64_t> values, std::uint64_t sigma);
    static FixedWidthArray from_words(std::vector<std::uint64_t> words, std::size_t size, unsigned width);

    std::size_t size() const noexcept { return size_; }
    unsigned width() const noexcept { return width_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::uint64_t get(std::size_t i) const noexcept
    {
        const std::size_t bit = i * width_;
        const std::size_t w = bit >> 6;
        const unsigned off = bit & 63;
        std::uint64_t v = words_[w] >> off;
        if (off + width_ > 64)
            v |= words_[w + 1] << (64 - off);
        return v & mask_;
    }

    /// Throws std::invalid_argument when `value` needs more than width() bits.
    void set(std::size_t i, std::uint64_t value);
    void push_back(std::uint64_t value);

    friend bool operator==(const FixedWidthArray& a, const FixedWidthArray& b)
    {
        return a.size_ == b.size_ && a.width_ == b.width_ && a.words_ == b.words_;
    }

private:
    void store(std::size_t i, std::uint64_t value) noexcept;

    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
    unsigned width_ = 1;
    std::uint64_t mask_ = 1;
};

} // namespace gcis
