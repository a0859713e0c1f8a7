#include "ofdmclip/random.hpp"

namespace ofdmclip {

std::mt19937_64 substream(RngSeed seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.value), static_cast<std::uint32_t>(seed.value >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::vector<Bit> random_bits(std::mt19937_64& engine, std::size_t count) {
  std::vector<Bit> bits(count);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 64 == 0) word = engine();
    bits[i] = static_cast<Bit>(word & 1u);
    word >>= 1;
  }
  return bits;
}

}  // namespace ofdmclip
