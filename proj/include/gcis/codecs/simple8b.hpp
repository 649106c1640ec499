#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gcis::simple8b {

inline constexpr std::uint64_t kMaxValue = (std::uint64_t{1} << 60) - 1;

struct Selector {
    unsigned count;
    unsigned bits;
};

/// Selector table, 4-bit selector in the low bits of each word. Rows 0 and 1
/// are zero runs (no payload).
inline constexpr std::array<Selector, 16> kSelectors{{
    {240, 0}, {120, 0}, {60, 1}, {30, 2}, {20, 3}, {15, 4}, {12, 5}, {10, 6},
    {8, 7},   {7, 8},   {6, 10}, {5, 12}, {4, 15}, {3, 20}, {2, 30}, {1, 60},
}};

/// A Simple8b word stream plus the number of integers it carries; the final
/// word may be only partially filled.
struct Stream {
    std::vector<std::uint64_t> words;
    std::size_t count = 0;

    friend bool operator==(const Stream&, const Stream&) = default;
};

/// Greedy longest-fit packing. Throws std::invalid_argument("value too large")
/// for values of 2^60 or more.
Stream encode(std::span<const std::uint64_t> values);

/// Exact inverse of encode. Throws CorruptError("corrupt stream") when the
/// words do not carry exactly `stream.count` integers.
std::vector<std::uint64_t> decode(const Stream& stream);

} // namespace gcis::simple8b
