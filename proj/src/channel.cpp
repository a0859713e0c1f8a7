#include "ofdmclip/channel.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "ofdmclip/metrics.hpp"
#include "ofdmclip/modulation.hpp"
#include "ofdmclip/parallel.hpp"

namespace ofdmclip {

TimeSignal awgn(const TimeSignal& signal, double snr_db, RngSeed seed, std::uint64_t stream) {
  const double power = std::pow(rms(signal.samples), 2);
  if (power == 0.0) throw std::invalid_argument("AWGN SNR is undefined for an all-zero signal");
  if (std::isnan(snr_db)) throw std::invalid_argument("SNR must not be NaN");
  if (snr_db == kNoiseless) return signal;

  const double variance = power / std::pow(10.0, snr_db / 10.0);
  auto engine = substream(seed, stream);
  std::normal_distribution<double> gauss(0.0, std::sqrt(variance / 2.0));
  TimeSignal out{signal.samples};
  for (auto& s : out.samples) {
    const double re = gauss(engine);
    const double im = gauss(engine);
    s += Complex{re, im};
  }
  return out;
}

SerPoint measure_ser(const OfdmConfig& ofdm, const std::optional<ClipConfig>& clip, double snr_db,
                     std::size_t n_symbols, RngSeed seed, unsigned threads) {
  ofdm.validate();
  if (clip) clip->validate();
  if (n_symbols == 0) throw std::invalid_argument("SER needs at least one OFDM symbol");

  const double sample_snr_db = snr_db - 10.0 * std::log10(static_cast<double>(ofdm.oversample));
  std::vector<std::uint64_t> errors(n_symbols, 0);
  parallel_for(n_symbols, threads, [&](std::size_t i) {
    std::vector<unsigned> sent;
    const auto symbol = random_symbol(ofdm, seed, i, &sent);
    const TimeSignal tx = clip ? rcf(symbol, *clip, ofdm).signal : synthesize(symbol, ofdm.oversample);
    const TimeSignal rx = awgn(tx, sample_snr_db, seed, noise_stream(i));
    const auto bins = extract_in_band(analyze(rx), ofdm.subcarriers);
    const auto decided = decide_labels(bins.bins, ofdm.mod_order);
    std::uint64_t count = 0;
    for (std::size_t k = 0; k < sent.size(); ++k) count += decided[k] != sent[k] ? 1 : 0;
    errors[i] = count;
  });

  SerPoint point;
  point.snr_db = snr_db;
  point.symbols_sent = static_cast<std::uint64_t>(n_symbols) * static_cast<std::uint64_t>(ofdm.subcarriers);
  point.symbol_errors = std::accumulate(errors.begin(), errors.end(), std::uint64_t{0});
  point.ser = static_cast<double>(point.symbol_errors) / static_cast<double>(point.symbols_sent);
  return point;
}

std::string ser_csv(std::span<const SerPoint> points) {
  std::string out = "snr_db,symbols,errors,ser\n";
  char line[128];
  for (const auto& p : points) {
    std::snprintf(line, sizeof line, "%.4f,%llu,%llu,%.9g\n", p.snr_db,
                  static_cast<unsigned long long>(p.symbols_sent),
                  static_cast<unsigned long long>(p.symbol_errors), p.ser);
    out += line;
  }
  return out;
}

}  // namespace ofdmclip
