#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ofdmclip/crest_reduction.hpp"
#include "ofdmclip/random.hpp"
#include "ofdmclip/transform.hpp"
#include "ofdmclip/types.hpp"

namespace ofdmclip {

// Peak power over mean power of one symbol, in dB. Throws on an all-zero signal.
double papr_db(std::span<const Complex> samples);
inline double papr_db(const TimeSignal& signal) { return papr_db(signal.samples); }

struct CcdfCurve {
  std::vector<double> thresholds_db;
  std::vector<double> exceed_prob;
  std::size_t n_samples = 0;
};

// exceed_prob[i] = fraction of samples strictly greater than thresholds_db[i].
CcdfCurve estimate_ccdf(std::span<const double> papr_samples_db, std::span<const double> thresholds_db);

// 4.0 .. 13.0 dB in 0.25 dB steps.
std::vector<double> default_ccdf_thresholds();

// Smallest sample value g such that at most floor(p * n) samples exceed g;
// the empirical PAPR at CCDF level p.
double ccdf_level_db(std::span<const double> papr_samples_db, double probability = 1e-3);

double mean(std::span<const double> values);

// PAPR in dB of n_symbols random OFDM symbols, indexed by symbol. Symbol i
// draws its payload from substream payload_stream(i), so the result does not
// depend on the thread count. Without a clip config the symbols go out
// unclipped.
std::vector<double> simulate_papr(const OfdmConfig& ofdm, const std::optional<ClipConfig>& clip,
                                  std::size_t n_symbols, RngSeed seed, unsigned threads = 0);

// Random frequency-domain symbol for substream payload_stream(index).
FreqSymbol random_symbol(const OfdmConfig& ofdm, RngSeed seed, std::uint64_t index,
                         std::vector<unsigned>* labels = nullptr);

// `threshold_db,ccdf` with one row per threshold.
std::string ccdf_csv(const CcdfCurve& curve);

}  // namespace ofdmclip
