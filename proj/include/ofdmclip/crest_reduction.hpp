#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ofdmclip/transform.hpp"
#include "ofdmclip/types.hpp"
#include "ofdmclip/windows.hpp"

namespace ofdmclip {

enum class ClipStrategy {
  HardClipOnly,   // clip, no filtering
  ClipAndFilter,  // clip, then zero the out-of-band bins
  PeakWindow,     // window-shaped attenuation around each peak instead of clipping
};

// CLI names: none, cf, pw.
ClipStrategy parse_clip_strategy(std::string_view name);
std::string_view clip_strategy_name(ClipStrategy strategy);

struct ClipConfig {
  double clip_ratio_db = 3.0;  // threshold over unclipped RMS
  int iterations = 5;
  ClipStrategy strategy = ClipStrategy::ClipAndFilter;
  WindowKind window{};
  int window_length = 11;  // odd

  void validate() const;
};

struct ClipReport {
  double papr_before_db = 0.0;
  double papr_after_db = 0.0;
  std::size_t clipped_sample_count = 0;  // summed over iterations
  std::vector<double> per_iteration_papr_db;
};

struct ClipResult {
  TimeSignal signal;
  ClipReport report;
};

double rms(std::span<const Complex> samples);

// A = rms * 10^(cr/20). Throws on an all-zero signal.
double threshold_from_ratio(const TimeSignal& signal, double clip_ratio_db);

// Hard envelope limiter: magnitude min(|x|, A) with the phase kept. Samples at
// or under A are passed through untouched, and clipped samples never exceed A,
// so clipping is idempotent bit for bit.
TimeSignal clip(const TimeSignal& signal, double threshold);

// Removes everything outside the N in-band bins of an N*L signal.
TimeSignal oob_filter(const TimeSignal& signal, int subcarriers, int oversample);

// Local maxima of |x| above `threshold`. A maximum is strictly larger than
// both neighbours; a flat top counts once, at its first sample; the two end
// samples only need to beat their single neighbour.
std::vector<std::size_t> find_peaks(std::span<const Complex> samples, double threshold);

// Peak windowing. Each peak n_i with depth a_i = 1 - A/|x[n_i]| contributes
// a_i * w(n - n_i) to an envelope b, using a `window_length` window centred
// on the peak (truncated at the signal ends). Output is x[n] * (1 - min(b, 1)).
TimeSignal peak_window_suppress(const TimeSignal& signal, double threshold, const WindowKind& kind,
                                int window_length);

// Recursive clipping and filtering of one OFDM symbol. The threshold is set
// once from the unclipped oversampled signal and kept for every iteration.
ClipResult rcf(const FreqSymbol& symbol, const ClipConfig& clip, const OfdmConfig& ofdm);

}  // namespace ofdmclip
