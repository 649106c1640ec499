#include "gcis/codecs/simple8b.hpp"

#include <algorithm>
#include <stdexcept>

#include "gcis/errors.hpp"

namespace gcis::simple8b {

namespace {

bool zero_run(std::span<const std::uint64_t> values, std::size_t from, std::size_t len)
{
    if (values.size() - from < len)
        return false;
    return std::all_of(values.begin() + from, values.begin() + from + len, [](auto v) { return v == 0; });
}

} // namespace

Stream encode(std::span<const std::uint64_t> values)
{
    Stream out;
    out.count = values.size();
    for (auto v : values) {
        if (v > kMaxValue)
            throw std::invalid_argument("value too large");
    }

    std::size_t i = 0;
    while (i < values.size()) {
        if (zero_run(values, i, 240)) {
            out.words.push_back(0);
            i += 240;
            continue;
        }
        if (zero_run(values, i, 120)) {
            out.words.push_back(1);
            i += 120;
            continue;
        }
        const std::size_t remaining = values.size() - i;
        for (unsigned sel = 2; sel < kSelectors.size(); ++sel) {
            const auto [count, bits] = kSelectors[sel];
            // a short tail may fill a word only partially
            const std::size_t take = std::min<std::size_t>(count, remaining);
            const std::uint64_t limit = std::uint64_t{1} << bits;
            bool fits = true;
            for (std::size_t k = 0; k < take && fits; ++k)
                fits = values[i + k] < limit;
            if (!fits)
                continue;
            std::uint64_t word = sel;
            for (std::size_t k = 0; k < take; ++k)
                word |= values[i + k] << (4 + k * bits);
            out.words.push_back(word);
            i += take;
            break;
        }
    }
    return out;
}

std::vector<std::uint64_t> decode(const Stream& stream)
{
    std::vector<std::uint64_t> out;
    out.reserve(stream.count);
    for (auto word : stream.words) {
        if (out.size() >= stream.count)
            throw CorruptError("corrupt stream");
        const unsigned sel = word & 0xF;
        const auto [count, bits] = kSelectors[sel];
        const std::size_t take = std::min<std::size_t>(count, stream.count - out.size());
        if (bits == 0) {
            if ((word >> 4) != 0 || take != count)
                throw CorruptError("corrupt stream");
            out.insert(out.end(), count, 0);
            continue;
        }
        const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
        for (std::size_t k = 0; k < take; ++k)
            out.push_back((word >> (4 + k * bits)) & mask);
        if (take < count && (word >> (4 + take * bits)) != 0)
            throw CorruptError("corrupt stream");
    }
    if (out.size() != stream.count)
        throw CorruptError("corrupt stream");
    return out;
}

} // namespace gcis::simple8b
