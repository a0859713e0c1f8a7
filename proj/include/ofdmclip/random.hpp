#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ofdmclip/modulation.hpp"

namespace ofdmclip {

struct RngSeed {
  std::uint64_t value = 1;
};

// Independent generator for substream `stream` of `seed`. The same pair
// always yields the same sequence, whichever thread asks for it.
std::mt19937_64 substream(RngSeed seed, std::uint64_t stream);

std::vector<Bit> random_bits(std::mt19937_64& engine, std::size_t count);

// Substream layout used by the simulators: OFDM symbol i draws its payload
// from stream 2i and its channel noise from stream 2i + 1.
constexpr std::uint64_t payload_stream(std::uint64_t symbol) { return 2 * symbol; }
constexpr std::uint64_t noise_stream(std::uint64_t symbol) { return 2 * symbol + 1; }

}  // namespace ofdmclip
