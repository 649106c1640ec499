#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gcis {

class ByteWriter;
class ByteReader;

/// Plain bitmap, LSB-first within 64-bit words, with optional rank/select
/// directories. The directories are never serialized: callers invoke
/// build_support() after construction or load.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size, bool value = false);

    static BitVector from_words(std::vector<std::uint64_t> words, std::size_t size);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool operator[](std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true) noexcept;
    void push_back(bool value);

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    void build_support();
    bool has_support() const noexcept { return !block_rank_.empty(); }

    /// Number of one bits in [0, pos).
    std::size_t rank1(std::size_t pos) const;
    /// Position of the k-th one bit, k counted from 0.
    std::size_t select1(std::size_t k) const;
    std::size_t count_ones() const noexcept { return ones_; }
    /// First one bit at or after `pos`, or size() if there is none.
    std::size_t next_one(std::size_t pos) const noexcept;

    /// 64-bit bit length, then the words, then padding to 8 bytes.
    void write(ByteWriter& out) const;
    static BitVector read(ByteReader& in);

    friend bool operator==(const BitVector& a, const BitVector& b)
    {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    static constexpr std::size_t kWordsPerBlock = 8;
    static constexpr std::size_t kSelectSample = 256;

    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
    std::size_t ones_ = 0;
    std::vector<std::uint64_t> block_rank_;
    std::vector<std::uint32_t> select_hint_;
};

} // namespace gcis
