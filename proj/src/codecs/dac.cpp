#include "gcis/codecs/dac.hpp"

#include <bit>
#include <stdexcept>

#include "gcis/codecs/bytes.hpp"
#include "gcis/errors.hpp"

namespace gcis {

Dac::Dac(std::span<const std::uint64_t> values, unsigned block_bits)
    : size_(values.size()), block_bits_(block_bits)
{
    if (block_bits == 0 || block_bits > 64)
        throw std::invalid_argument("DAC block width must be in [1, 64]");
    const std::uint64_t mask = block_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << block_bits) - 1;

    std::vector<std::uint64_t> pending(values.begin(), values.end());
    // layer 0 always exists, even for an empty array
    do {
        FixedWidthArray chunk(pending.size(), block_bits);
        BitVector more(pending.size());
        std::vector<std::uint64_t> next;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            chunk.set(i, pending[i] & mask);
            const std::uint64_t rest = block_bits == 64 ? 0 : pending[i] >> block_bits;
            if (rest != 0) {
                more.set(i);
                next.push_back(rest);
            }
        }
        more.build_support();
        chunks_.push_back(std::move(chunk));
        more_.push_back(std::move(more));
        pending = std::move(next);
    } while (!pending.empty());
}

std::uint64_t Dac::operator[](std::size_t i) const
{
    if (i >= size_)
        throw std::out_of_range("DAC index out of range");
    std::uint64_t value = 0;
    unsigned shift = 0;
    for (std::size_t layer = 0;; ++layer) {
        value |= chunks_[layer].get(i) << shift;
        if (!more_[layer][i])
            return value;
        i = more_[layer].rank1(i);
        shift += block_bits_;
    }
}

void Dac::write(ByteWriter& out) const
{
    out.put_u8(static_cast<std::uint8_t>(chunks_.size()));
    out.pad_to_8();
    for (std::size_t layer = 0; layer < chunks_.size(); ++layer) {
        out.put_u64(chunks_[layer].size() * block_bits_);
        out.put_words(chunks_[layer].words());
        out.pad_to_8();
        more_[layer].write(out);
    }
}

Dac Dac::read(ByteReader& in, unsigned block_bits)
{
    Dac dac;
    dac.block_bits_ = block_bits;
    const std::size_t layers = in.get_u8();
    in.skip_pad_to_8();
    if (layers == 0)
        throw CorruptError("DAC without layers");
    std::size_t expected = 0;
    for (std::size_t layer = 0; layer < layers; ++layer) {
        const std::uint64_t bits = in.get_u64();
        if (bits % block_bits != 0 || bits / 8 > in.remaining())
            throw CorruptError("DAC chunk bitmap length invalid");
        const std::size_t count = bits / block_bits;
        auto chunk = FixedWidthArray::from_words(in.get_words(words_for_bits(bits)), count, block_bits);
        in.skip_pad_to_8();
        auto more = BitVector::read(in);
        if (more.size() != count || (layer > 0 && count != expected))
            throw CorruptError("DAC layer sizes inconsistent");
        more.build_support();
        expected = more.count_ones();
        if (layer + 1 == layers && expected != 0)
            throw CorruptError("DAC continuation past last layer");
        dac.chunks_.push_back(std::move(chunk));
        dac.more_.push_back(std::move(more));
    }
    dac.size_ = dac.chunks_.front().size();
    return dac;
}

} // namespace gcis
