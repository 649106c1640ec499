#include "gcis/corpus.hpp"

#include <random>
#include <stdexcept>

namespace gcis {

std::vector<std::uint8_t> gen_repetitive(std::span<const std::uint8_t> seed, std::size_t copies, double rate,
                                         std::uint64_t rng_seed)
{
    if (copies == 0)
        throw std::invalid_argument("copies must be at least 1");
    if (!(rate >= 0.0 && rate <= 1.0))
        throw std::invalid_argument("rate must lie in [0, 1]");
    std::mt19937_64 rng(rng_seed);
    std::vector<std::uint8_t> out;
    out.reserve(seed.size() * copies);
    for (std::size_t c = 0; c < copies; ++c) {
        for (auto b : seed) {
            // 53 random bits as a double in [0, 1)
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            out.push_back(u < rate ? static_cast<std::uint8_t>(rng() & 0xFF) : b);
        }
    }
    return out;
}

std::vector<std::uint8_t> random_text(std::size_t n, unsigned alphabet, std::uint64_t rng_seed)
{
    if (alphabet == 0 || alphabet > 256)
        throw std::invalid_argument("alphabet must lie in [1, 256]");
    std::mt19937_64 rng(rng_seed);
    std::vector<std::uint8_t> out(n);
    for (auto& b : out)
        b = static_cast<std::uint8_t>(rng() % alphabet);
    return out;
}

} // namespace gcis
