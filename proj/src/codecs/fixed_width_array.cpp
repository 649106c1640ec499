#include "gcis/codecs/fixed_width_array.hpp"

#include <stdexcept>

#include "gcis/codecs/bytes.hpp"
#include "gcis/errors.hpp"

namespace gcis {

namespace {

std::uint64_t mask_for(unsigned width)
{
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

} // namespace

FixedWidthArray::FixedWidthArray(std::size_t size, unsigned width)
    : words_(words_for_bits(size * width)), size_(size), width_(width), mask_(mask_for(width))
{
    if (width == 0 || width > 64)
        throw std::invalid_argument("cell width must be in [1, 64]");
}

FixedWidthArray FixedWidthArray::pack(std::span<const std::uint64_t> values, std::uint64_t sigma)
{
    FixedWidthArray arr(values.size(), width_for_sigma(sigma));
    for (std::size_t i = 0; i < values.size(); ++i)
        arr.set(i, values[i]);
    return arr;
}

FixedWidthArray FixedWidthArray::from_words(std::vector<std::uint64_t> words, std::size_t size, unsigned width)
{
    FixedWidthArray arr(0, width);
    if (words.size() != words_for_bits(size * width))
        throw CorruptError("fixed-width array word count mismatch");
    arr.words_ = std::move(words);
    arr.size_ = size;
    return arr;
}

void FixedWidthArray::store(std::size_t i, std::uint64_t value) noexcept
{
    const std::size_t bit = i * width_;
    const std::size_t w = bit >> 6;
    const unsigned off = bit & 63;
    words_[w] = (words_[w] & ~(mask_ << off)) | (value << off);
    if (off + width_ > 64) {
        const unsigned spill = off + width_ - 64;
        const std::uint64_t hi_mask = (std::uint64_t{1} << spill) - 1;
        words_[w + 1] = (words_[w + 1] & ~hi_mask) | (value >> (64 - off));
    }
}

void FixedWidthArray::set(std::size_t i, std::uint64_t value)
{
    if (value & ~mask_)
        throw std::invalid_argument("value exceeds cell width");
    store(i, value);
}

void FixedWidthArray::push_back(std::uint64_t value)
{
    if (value & ~mask_)
        throw std::invalid_argument("value exceeds cell width");
    ++size_;
    const std::size_t need = words_for_bits(size_ * width_);
    if (words_.size() < need)
        words_.resize(need, 0);
    store(size_ - 1, value);
}

} // namespace gcis
