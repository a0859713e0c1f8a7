#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>

#include "ofdmclip/crest_reduction.hpp"
#include "ofdmclip/random.hpp"
#include "ofdmclip/transform.hpp"

namespace ofdmclip {

// Passing this as the SNR turns the channel into a wire.
inline constexpr double kNoiseless = std::numeric_limits<double>::infinity();

struct SerPoint {
  double snr_db = 0.0;
  std::uint64_t symbols_sent = 0;  // constellation symbols
  std::uint64_t symbol_errors = 0;
  double ser = 0.0;
};

// Adds circularly symmetric complex Gaussian noise of variance
// mean|x|^2 / 10^(snr_db/10) per sample (half of it per real dimension).
// Deterministic for a fixed (seed, stream).
TimeSignal awgn(const TimeSignal& signal, double snr_db, RngSeed seed, std::uint64_t stream);

// End-to-end symbol error rate over n_symbols OFDM symbols:
// bits -> map -> synthesize -> [rcf] -> awgn -> analyze -> in-band bins -> slice.
//
// snr_db is the transmitted power over the noise power falling inside the
// N-subcarrier band, i.e. Es/N0 per subcarrier for an unclipped symbol. With
// oversampling L the per-sample noise is therefore 10*log10(L) dB stronger.
SerPoint measure_ser(const OfdmConfig& ofdm, const std::optional<ClipConfig>& clip, double snr_db,
                     std::size_t n_symbols, RngSeed seed, unsigned threads = 0);

// `snr_db,symbols,errors,ser`
std::string ser_csv(std::span<const SerPoint> points);

}  // namespace ofdmclip
