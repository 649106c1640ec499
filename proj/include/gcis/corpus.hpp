#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gcis {

/// `copies` back-to-back copies of `seed`; each output byte is independently
/// replaced by a uniformly random byte with probability `rate`.
/// Deterministic for a fixed rng_seed. Throws std::invalid_argument when
/// copies is 0 or rate lies outside [0, 1].
std::vector<std::uint8_t> gen_repetitive(std::span<const std::uint8_t> seed, std::size_t copies, double rate,
                                         std::uint64_t rng_seed);

/// Uniform random bytes over the first `alphabet` byte values.
std::vector<std::uint8_t> random_text(std::size_t n, unsigned alphabet, std::uint64_t rng_seed);

} // namespace gcis
