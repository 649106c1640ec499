#include "gcis/codecs/elias_fano.hpp"

#include <stdexcept>

#include "gcis/codecs/bytes.hpp"
#include "gcis/errors.hpp"

namespace gcis {

namespace {

std::uint64_t low_bits(const std::vector<std::uint64_t>& words, std::size_t i, unsigned width)
{
    if (width == 0)
        return 0;
    const std::size_t bit = i * width;
    const std::size_t w = bit >> 6;
    const unsigned off = bit & 63;
    std::uint64_t v = words[w] >> off;
    if (off + width > 64)
        v |= words[w + 1] << (64 - off);
    return width == 64 ? v : v & ((std::uint64_t{1} << width) - 1);
}

} // namespace

unsigned EliasFano::low_width_for(std::size_t n, std::uint64_t m)
{
    // smallest L with n * 2^L >= m, i.e. ceil(lg(m/n))
    unsigned width = 0;
    if (n == 0)
        return 0;
    while (width < 63 && (static_cast<unsigned __int128>(n) << width) < m)
        ++width;
    return width;
}

std::size_t EliasFano::core_bound(std::size_t n, std::uint64_t m)
{
    return 2 * n + n * low_width_for(n, m);
}

EliasFano::EliasFano(std::span<const std::uint64_t> values, std::uint64_t universe)
    : n_(values.size()), m_(universe), low_width_(low_width_for(values.size(), universe))
{
    for (std::size_t i = 0; i < n_; ++i) {
        if (values[i] >= m_)
            throw std::invalid_argument("Elias-Fano value outside universe");
        if (i > 0 && values[i] < values[i - 1])
            throw std::invalid_argument("Elias-Fano input is not monotone");
    }
    low_.assign(words_for_bits(n_ * low_width_), 0);
    const std::size_t high_len = n_ == 0 ? 0 : n_ + static_cast<std::size_t>((m_ - 1) >> low_width_) + 1;
    high_ = BitVector(high_len);
    for (std::size_t i = 0; i < n_; ++i) {
        const std::uint64_t v = values[i];
        if (low_width_ > 0) {
            const std::uint64_t lo = low_width_ == 64 ? v : v & ((std::uint64_t{1} << low_width_) - 1);
            const std::size_t bit = i * low_width_;
            low_[bit >> 6] |= lo << (bit & 63);
            if ((bit & 63) + low_width_ > 64)
                low_[(bit >> 6) + 1] |= lo >> (64 - (bit & 63));
        }
        high_.set(static_cast<std::size_t>(v >> low_width_) + i);
    }
    high_.build_support();
}

std::uint64_t EliasFano::operator[](std::size_t i) const
{
    if (i >= n_)
        throw std::out_of_range("Elias-Fano index out of range");
    const std::uint64_t high = high_.select1(i) - i;
    return (high << low_width_) | low_bits(low_, i, low_width_);
}

void EliasFano::decode_run(std::size_t i, std::size_t count, std::uint64_t* out) const
{
    if (count == 0)
        return;
    if (i + count > n_)
        throw std::out_of_range("Elias-Fano index out of range");
    std::size_t pos = high_.select1(i);
    for (std::size_t k = 0;; ++k) {
        out[k] = (static_cast<std::uint64_t>(pos - (i + k)) << low_width_) | low_bits(low_, i + k, low_width_);
        if (k + 1 == count)
            break;
        pos = high_.next_one(pos + 1);
    }
}

void EliasFano::write(ByteWriter& out) const
{
    out.put_u64(n_);
    out.put_u64(m_);
    out.put_words(low_);
    out.pad_to_8();
    out.put_words(high_.words());
    out.pad_to_8();
}

EliasFano EliasFano::read(ByteReader& in)
{
    EliasFano ef;
    ef.n_ = in.get_u64();
    ef.m_ = in.get_u64();
    if (ef.n_ > 0 && ef.m_ == 0)
        throw CorruptError("Elias-Fano universe is empty");
    // every element owns at least one bit of the high bitmap
    if (ef.n_ / 8 > in.remaining())
        throw FormatError(FormatError::Kind::Truncated, "truncated container");
    ef.low_width_ = low_width_for(ef.n_, ef.m_);
    ef.low_ = in.get_words(words_for_bits(ef.n_ * ef.low_width_));
    const std::size_t high_len = ef.n_ == 0 ? 0 : ef.n_ + static_cast<std::size_t>((ef.m_ - 1) >> ef.low_width_) + 1;
    ef.high_ = BitVector::from_words(in.get_words(words_for_bits(high_len)), high_len);
    ef.high_.build_support();
    if (ef.high_.count_ones() != ef.n_)
        throw CorruptError("Elias-Fano high bitmap inconsistent");
    return ef;
}

} // namespace gcis
