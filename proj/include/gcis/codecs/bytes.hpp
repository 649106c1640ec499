#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gcis {

/// Little-endian byte sink. Every block written through it can be padded to
/// an 8-byte boundary relative to the start of the stream.
class ByteWriter {
public:
    void put_u8(std::uint8_t v) { buf_.push_back(v); }
    void put_u32(std::uint32_t v);
    void put_u64(std::uint64_t v);
    void put_words(std::span<const std::uint64_t> words);
    void put_bytes(std::span<const std::uint8_t> bytes);
    void pad_to_8();

    std::size_t size() const noexcept { return buf_.size(); }
    std::vector<std::uint8_t>& bytes() noexcept { return buf_; }
    std::vector<std::uint8_t> take() noexcept { return std::move(buf_); }

private:
    std::vector<std::uint8_t> buf_;
};

/// Bounds-checked little-endian reader over a byte span. Running past the
/// end throws FormatError(Truncated).
class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t get_u8();
    std::uint32_t get_u32();
    std::uint64_t get_u64();
    std::vector<std::uint64_t> get_words(std::size_t count);
    std::span<const std::uint8_t> get_bytes(std::size_t count);
    void skip_pad_to_8();

    std::size_t position() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return data_.size() - pos_; }
    bool at_end() const noexcept { return pos_ == data_.size(); }

private:
    void require(std::size_t count) const;

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

inline std::size_t words_for_bits(std::size_t bits) { return (bits + 63) / 64; }

} // namespace gcis
