#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gcis/codecs/bit_vector.hpp"
#include "gcis/codecs/fixed_width_array.hpp"

namespace gcis {

/// Directly Addressable Codes: each value is cut into b-bit chunks, lowest
/// chunk in the first layer. A continuation bit marks every chunk that is not
/// the value's last one; rank on that bitmap locates the next chunk.
class Dac {
public:
    static constexpr unsigned kDefaultBlock = 4;

    Dac() = default;
    /// Throws std::invalid_argument if block_bits is 0 or above 64.
    explicit Dac(std::span<const std::uint64_t> values, unsigned block_bits = kDefaultBlock);

    std::size_t size() const noexcept { return size_; }
    unsigned block_bits() const noexcept { return block_bits_; }
    std::size_t layers() const noexcept { return chunks_.size(); }
    const BitVector& continuation(std::size_t layer) const { return more_.at(layer); }

    /// Throws std::out_of_range for i >= size().
    std::uint64_t operator[](std::size_t i) const;

    /// Layer count as u8 (padded to 8 bytes), then per layer the chunk bitmap
    /// and the continuation bitmap, each bit-length prefixed and padded.
    void write(class ByteWriter& out) const;
    static Dac read(class ByteReader& in, unsigned block_bits = kDefaultBlock);

    friend bool operator==(const Dac& a, const Dac& b)
    {
        return a.size_ == b.size_ && a.block_bits_ == b.block_bits_ && a.chunks_ == b.chunks_ && a.more_ == b.more_;
    }

private:
    std::size_t size_ = 0;
    unsigned block_bits_ = kDefaultBlock;
    std::vector<FixedWidthArray> chunks_;
    std::vector<BitVector> more_;
};

} // namespace gcis
