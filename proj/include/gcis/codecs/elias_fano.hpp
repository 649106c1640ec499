#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gcis/codecs/bit_vector.hpp"
#include "gcis/codecs/fixed_width_array.hpp"

namespace gcis {

/// Elias-Fano encoding of a non-decreasing sequence over [0, m). Each value
/// is split into ceil(lg(m/n)) low bits, stored verbatim, and a high part
/// stored in negated unary in a bitmap with select support.
class EliasFano {
public:
    EliasFano() = default;

    /// Throws std::invalid_argument if `values` decreases anywhere or a value
    /// is not below `universe`.
    EliasFano(std::span<const std::uint64_t> values, std::uint64_t universe);

    std::size_t size() const noexcept { return n_; }
    std::uint64_t universe() const noexcept { return m_; }
    unsigned low_width() const noexcept { return low_width_; }

    /// i counted from 0. Constant time (one select on the high bitmap).
    std::uint64_t operator[](std::size_t i) const;
    /// Values i, i+1, ..., i+count-1 into out: one select, then a forward
    /// scan of the high bitmap.
    void decode_run(std::size_t i, std::size_t count, std::uint64_t* out) const;

    /// Bits in the low array plus the high bitmap, support excluded.
    std::size_t core_bits() const noexcept { return n_ * low_width_ + high_.size(); }

    /// Upper bound 2n + n*ceil(lg(m/n)).
    static std::size_t core_bound(std::size_t n, std::uint64_t m);

    /// n u64, m u64, low bits padded to 8 bytes, high bitmap padded to 8 bytes.
    void write(class ByteWriter& out) const;
    static EliasFano read(class ByteReader& in);

    friend bool operator==(const EliasFano& a, const EliasFano& b)
    {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.low_ == b.low_ && a.high_ == b.high_;
    }

private:
    static unsigned low_width_for(std::size_t n, std::uint64_t m);

    std::size_t n_ = 0;
    std::uint64_t m_ = 0;
    unsigned low_width_ = 0;
    std::vector<std::uint64_t> low_;
    BitVector high_;
};

} // namespace gcis
