#include "ofdmclip/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "ofdmclip/modulation.hpp"
#include "ofdmclip/parallel.hpp"

namespace ofdmclip {

double papr_db(std::span<const Complex> samples) {
  double peak = 0.0;
  double energy = 0.0;
  for (const auto& s : samples) {
    const double p = std::norm(s);
    peak = std::max(peak, p);
    energy += p;
  }
  if (energy == 0.0) throw std::invalid_argument("PAPR of an all-zero signal is undefined");
  return 10.0 * std::log10(peak * static_cast<double>(samples.size()) / energy);
}

CcdfCurve estimate_ccdf(std::span<const double> papr_samples_db, std::span<const double> thresholds_db) {
  if (papr_samples_db.empty()) throw std::invalid_argument("CCDF needs at least one PAPR sample");
  if (!std::is_sorted(thresholds_db.begin(), thresholds_db.end())) {
    throw std::invalid_argument("CCDF thresholds must be ascending");
  }
  std::vector<double> sorted(papr_samples_db.begin(), papr_samples_db.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());

  CcdfCurve curve;
  curve.n_samples = sorted.size();
  curve.thresholds_db.assign(thresholds_db.begin(), thresholds_db.end());
  curve.exceed_prob.reserve(thresholds_db.size());
  for (double t : thresholds_db) {
    const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), t);
    curve.exceed_prob.push_back(static_cast<double>(above) / n);
  }
  return curve;
}

std::vector<double> default_ccdf_thresholds() {
  std::vector<double> grid;
  for (int i = 0; i <= 36; ++i) grid.push_back(4.0 + 0.25 * i);
  return grid;
}

double ccdf_level_db(std::span<const double> papr_samples_db, double probability) {
  if (papr_samples_db.empty()) throw std::invalid_argument("CCDF level needs at least one sample");
  if (!(probability >= 0.0 && probability < 1.0)) {
    throw std::invalid_argument("CCDF level probability must lie in [0, 1)");
  }
  std::vector<double> sorted(papr_samples_db.begin(), papr_samples_db.end());
  std::sort(sorted.begin(), sorted.end());
  const auto allowed = static_cast<std::size_t>(std::floor(probability * static_cast<double>(sorted.size())));
  return sorted[sorted.size() - 1 - allowed];
}

double mean(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean of an empty set");
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

FreqSymbol random_symbol(const OfdmConfig& ofdm, RngSeed seed, std::uint64_t index,
                         std::vector<unsigned>* labels) {
  const int k = constellation(ofdm.mod_order).bits_per_symbol();
  auto engine = substream(seed, payload_stream(index));
  const auto bits = random_bits(engine, static_cast<std::size_t>(ofdm.subcarriers) * static_cast<std::size_t>(k));
  if (labels) {
    labels->assign(static_cast<std::size_t>(ofdm.subcarriers), 0u);
    for (std::size_t i = 0; i < bits.size(); ++i) {
      auto& l = (*labels)[i / static_cast<std::size_t>(k)];
      l = (l << 1) | bits[i];
    }
  }
  return FreqSymbol{map_bits(bits, ofdm.mod_order)};
}

std::vector<double> simulate_papr(const OfdmConfig& ofdm, const std::optional<ClipConfig>& clip,
                                  std::size_t n_symbols, RngSeed seed, unsigned threads) {
  ofdm.validate();
  if (clip) clip->validate();
  std::vector<double> papr(n_symbols);
  parallel_for(n_symbols, threads, [&](std::size_t i) {
    const auto symbol = random_symbol(ofdm, seed, i);
    papr[i] = clip ? rcf(symbol, *clip, ofdm).report.papr_after_db
                   : papr_db(synthesize(symbol, ofdm.oversample));
  });
  return papr;
}

std::string ccdf_csv(const CcdfCurve& curve) {
  std::string out = "threshold_db,ccdf\n";
  char line[64];
  for (std::size_t i = 0; i < curve.thresholds_db.size(); ++i) {
    std::snprintf(line, sizeof line, "%.4f,%.9g\n", curve.thresholds_db[i], curve.exceed_prob[i]);
    out += line;
  }
  return out;
}

}  // namespace ofdmclip
