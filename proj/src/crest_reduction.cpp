#include "ofdmclip/crest_reduction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ofdmclip/metrics.hpp"

namespace ofdmclip {

ClipStrategy parse_clip_strategy(std::string_view name) {
  if (name == "none") return ClipStrategy::HardClipOnly;
  if (name == "cf") return ClipStrategy::ClipAndFilter;
  if (name == "pw") return ClipStrategy::PeakWindow;
  throw std::invalid_argument("unknown clipping strategy '" + std::string(name) + "'");
}

std::string_view clip_strategy_name(ClipStrategy strategy) {
  switch (strategy) {
    case ClipStrategy::HardClipOnly: return "none";
    case ClipStrategy::ClipAndFilter: return "cf";
    case ClipStrategy::PeakWindow: return "pw";
  }
  return "?";
}

void ClipConfig::validate() const {
  if (!std::isfinite(clip_ratio_db)) throw std::invalid_argument("clip ratio must be finite");
  if (iterations < 0) throw std::invalid_argument("iteration count must be >= 0");
  if (window_length < 1 || window_length % 2 == 0) {
    throw std::invalid_argument("window length must be odd and >= 1, got " +
                                std::to_string(window_length));
  }
  window.validate();
}

double rms(std::span<const Complex> samples) {
  if (samples.empty()) return 0.0;
  double energy = 0.0;
  for (const auto& s : samples) energy += std::norm(s);
  return std::sqrt(energy / static_cast<double>(samples.size()));
}

double threshold_from_ratio(const TimeSignal& signal, double clip_ratio_db) {
  const double r = rms(signal.samples);
  if (r == 0.0) throw std::invalid_argument("cannot set a clipping threshold on an all-zero signal");
  return r * std::pow(10.0, clip_ratio_db / 20.0);
}

namespace {

void require_threshold(double threshold) {
  if (!(threshold > 0.0) || !std::isfinite(threshold)) {
    throw std::invalid_argument("clipping threshold must be positive and finite");
  }
}

Complex limit(Complex x, double threshold) {
  const double magnitude = std::abs(x);
  if (magnitude <= threshold) return x;
  double scale = threshold / magnitude;
  Complex y = x * scale;
  // Rounding can leave |y| one ulp above A; step the scale down until it does not.
  while (std::abs(y) > threshold) {
    scale = std::nextafter(scale, 0.0);
    y = x * scale;
  }
  return y;
}

}  // namespace

TimeSignal clip(const TimeSignal& signal, double threshold) {
  require_threshold(threshold);
  TimeSignal out{signal.samples};
  for (auto& s : out.samples) s = limit(s, threshold);
  return out;
}

TimeSignal oob_filter(const TimeSignal& signal, int subcarriers, int oversample) {
  const auto total = static_cast<std::size_t>(subcarriers) * static_cast<std::size_t>(oversample);
  if (subcarriers < 2 || oversample < 1 || signal.samples.size() != total) {
    throw std::invalid_argument("signal of " + std::to_string(signal.samples.size()) +
                                " samples does not match N*L = " + std::to_string(subcarriers) + "*" +
                                std::to_string(oversample));
  }
  auto spectrum = analyze(signal);
  for (std::size_t k = 0; k < total; ++k) {
    if (!is_in_band(k, total, subcarriers)) spectrum[k] = 0.0;
  }
  return synthesize_spectrum(spectrum);
}

std::vector<std::size_t> find_peaks(std::span<const Complex> samples, double threshold) {
  std::vector<double> magnitude(samples.size());
  std::transform(samples.begin(), samples.end(), magnitude.begin(), [](Complex s) { return std::abs(s); });

  std::vector<std::size_t> peaks;
  const std::size_t n = magnitude.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t end = i;  // last sample of the run of equal magnitudes starting at i
    while (end + 1 < n && magnitude[end + 1] == magnitude[i]) ++end;
    const bool rises = i == 0 || magnitude[i] > magnitude[i - 1];
    const bool falls = end + 1 == n || magnitude[end + 1] < magnitude[i];
    if (rises && falls && magnitude[i] > threshold) peaks.push_back(i);
    i = end + 1;
  }
  return peaks;
}

TimeSignal peak_window_suppress(const TimeSignal& signal, double threshold, const WindowKind& kind,
                                int window_length) {
  require_threshold(threshold);
  if (window_length < 1 || window_length % 2 == 0) {
    throw std::invalid_argument("peak window length must be odd, got " + std::to_string(window_length));
  }
  const auto peaks = find_peaks(signal.samples, threshold);
  if (peaks.empty()) return signal;

  const auto w = window(kind, window_length);
  const auto half = static_cast<std::ptrdiff_t>(window_length / 2);
  const auto n = static_cast<std::ptrdiff_t>(signal.samples.size());
  std::vector<double> envelope(signal.samples.size(), 0.0);
  for (std::size_t p : peaks) {
    const double depth = 1.0 - threshold / std::abs(signal.samples[p]);
    const auto centre = static_cast<std::ptrdiff_t>(p);
    for (std::ptrdiff_t j = -half; j <= half; ++j) {
      const std::ptrdiff_t idx = centre + j;
      if (idx < 0 || idx >= n) continue;
      envelope[static_cast<std::size_t>(idx)] += depth * w[static_cast<std::size_t>(j + half)];
    }
  }
  TimeSignal out{signal.samples};
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    out.samples[i] *= 1.0 - std::min(envelope[i], 1.0);
  }
  return out;
}

ClipResult rcf(const FreqSymbol& symbol, const ClipConfig& clip_config, const OfdmConfig& ofdm) {
  clip_config.validate();
  ofdm.validate();
  if (symbol.bins.size() != static_cast<std::size_t>(ofdm.subcarriers)) {
    throw std::invalid_argument("symbol has " + std::to_string(symbol.bins.size()) + " bins, expected " +
                                std::to_string(ofdm.subcarriers));
  }
  ClipResult result{synthesize(symbol, ofdm.oversample), {}};
  auto& report = result.report;
  report.papr_before_db = papr_db(result.signal);
  if (clip_config.iterations == 0) {
    report.papr_after_db = report.papr_before_db;
    report.per_iteration_papr_db = {report.papr_before_db};
    return result;
  }

  const double threshold = threshold_from_ratio(result.signal, clip_config.clip_ratio_db);
  for (int k = 0; k < clip_config.iterations; ++k) {
    auto& x = result.signal;
    report.clipped_sample_count += static_cast<std::size_t>(std::count_if(
        x.samples.begin(), x.samples.end(), [&](Complex s) { return std::abs(s) > threshold; }));
    switch (clip_config.strategy) {
      case ClipStrategy::HardClipOnly:
        x = clip(x, threshold);
        break;
      case ClipStrategy::ClipAndFilter:
        x = oob_filter(clip(x, threshold), ofdm.subcarriers, ofdm.oversample);
        break;
      case ClipStrategy::PeakWindow:
        x = peak_window_suppress(x, threshold, clip_config.window, clip_config.window_length);
        break;
    }
    report.per_iteration_papr_db.push_back(papr_db(x));
  }
  report.papr_after_db = report.per_iteration_papr_db.back();
  return result;
}

}  // namespace ofdmclip
