#include "gcis/codecs/bit_vector.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gcis/codecs/bytes.hpp"
#include "gcis/errors.hpp"

namespace gcis {

namespace {

std::size_t select_in_word(std::uint64_t word, std::size_t k)
{
    for (std::size_t i = 0; i < k; ++i)
        word &= word - 1;
    return static_cast<std::size_t>(std::countr_zero(word));
}

} // namespace

BitVector::BitVector(std::size_t size, bool value)
    : words_(words_for_bits(size), value ? ~std::uint64_t{0} : 0), size_(size)
{
    if (value && size % 64 != 0)
        words_.back() &= (std::uint64_t{1} << (size % 64)) - 1;
}

BitVector BitVector::from_words(std::vector<std::uint64_t> words, std::size_t size)
{
    if (words.size() != words_for_bits(size))
        throw std::invalid_argument("bit vector word count mismatch");
    BitVector bv;
    bv.words_ = std::move(words);
    bv.size_ = size;
    if (size % 64 != 0 && (bv.words_.back() >> (size % 64)) != 0)
        throw CorruptError("bits set past bit vector end");
    return bv;
}

void BitVector::set(std::size_t i, bool value) noexcept
{
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

void BitVector::push_back(bool value)
{
    if (size_ % 64 == 0)
        words_.push_back(0);
    ++size_;
    set(size_ - 1, value);
}

void BitVector::build_support()
{
    const std::size_t blocks = words_.size() / kWordsPerBlock + 1;
    block_rank_.assign(blocks + 1, 0);
    select_hint_.clear();
    std::uint64_t running = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
        block_rank_[b] = running;
        const std::size_t end = std::min(words_.size(), (b + 1) * kWordsPerBlock);
        for (std::size_t w = b * kWordsPerBlock; w < end; ++w) {
            const auto pc = static_cast<std::uint64_t>(std::popcount(words_[w]));
            // record the block holding every kSelectSample-th one
            while (select_hint_.size() * kSelectSample < running + pc)
                select_hint_.push_back(static_cast<std::uint32_t>(b));
            running += pc;
        }
    }
    block_rank_[blocks] = running;
    ones_ = running;
}

std::size_t BitVector::rank1(std::size_t pos) const
{
    if (pos > size_)
        throw std::out_of_range("rank position past end");
    const std::size_t word = pos >> 6;
    const std::size_t block = word / kWordsPerBlock;
    std::size_t r = block_rank_[block];
    for (std::size_t w = block * kWordsPerBlock; w < word; ++w)
        r += static_cast<std::size_t>(std::popcount(words_[w]));
    if (pos & 63)
        r += static_cast<std::size_t>(std::popcount(words_[word] & ((std::uint64_t{1} << (pos & 63)) - 1)));
    return r;
}

std::size_t BitVector::select1(std::size_t k) const
{
    if (k >= ones_)
        throw std::out_of_range("select past last one bit");
    std::size_t block = select_hint_[k / kSelectSample];
    while (block_rank_[block + 1] <= k)
        ++block;
    std::size_t remaining = k - block_rank_[block];
    for (std::size_t w = block * kWordsPerBlock;; ++w) {
        const auto pc = static_cast<std::size_t>(std::popcount(words_[w]));
        if (remaining < pc)
            return w * 64 + select_in_word(words_[w], remaining);
        remaining -= pc;
    }
}

std::size_t BitVector::next_one(std::size_t pos) const noexcept
{
    if (pos >= size_)
        return size_;
    std::size_t w = pos >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (pos & 63));
    while (word == 0) {
        if (++w >= words_.size())
            return size_;
        word = words_[w];
    }
    return std::min(size_, w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
}

void BitVector::write(ByteWriter& out) const
{
    out.put_u64(size_);
    out.put_words(words_);
    out.pad_to_8();
}

BitVector BitVector::read(ByteReader& in)
{
    const std::uint64_t bits = in.get_u64();
    if (bits / 8 > in.remaining())
        throw FormatError(FormatError::Kind::Truncated, "truncated container");
    auto words = in.get_words(words_for_bits(bits));
    in.skip_pad_to_8();
    return from_words(std::move(words), bits);
}

} // namespace gcis
