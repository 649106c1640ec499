#include "gcis/codecs/bytes.hpp"

#include "gcis/errors.hpp"

namespace gcis {

void ByteWriter::put_u32(std::uint32_t v)
{
    for (int i = 0; i < 4; ++i)
        buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::put_u64(std::uint64_t v)
{
    for (int i = 0; i < 8; ++i)
        buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::put_words(std::span<const std::uint64_t> words)
{
    buf_.reserve(buf_.size() + 8 * words.size());
    for (auto w : words)
        put_u64(w);
}

void ByteWriter::put_bytes(std::span<const std::uint8_t> bytes)
{
    buf_.insert(buf_.end(), bytes.begin(), bytes.end());
}

void ByteWriter::pad_to_8()
{
    while (buf_.size() % 8 != 0)
        buf_.push_back(0);
}

void ByteReader::require(std::size_t count) const
{
    if (count > data_.size() - pos_)
        throw FormatError(FormatError::Kind::Truncated, "truncated container");
}

std::uint8_t ByteReader::get_u8()
{
    require(1);
    return data_[pos_++];
}

std::uint32_t ByteReader::get_u32()
{
    require(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<std::uint32_t>(data_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
}

std::uint64_t ByteReader::get_u64()
{
    require(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
    pos_ += 8;
    return v;
}

std::vector<std::uint64_t> ByteReader::get_words(std::size_t count)
{
    if (count > remaining() / 8)
        throw FormatError(FormatError::Kind::Truncated, "truncated container");
    std::vector<std::uint64_t> out(count);
    for (auto& w : out)
        w = get_u64();
    return out;
}

std::span<const std::uint8_t> ByteReader::get_bytes(std::size_t count)
{
    require(count);
    auto out = data_.subspan(pos_, count);
    pos_ += count;
    return out;
}

void ByteReader::skip_pad_to_8()
{
    while (pos_ % 8 != 0) {
        if (get_u8() != 0)
            throw FormatError(FormatError::Kind::Malformed, "non-zero padding");
    }
}

} // namespace gcis
