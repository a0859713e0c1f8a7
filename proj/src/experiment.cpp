#include "ofdmclip/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <system_error>

#include "ofdmclip/channel.hpp"
#include "ofdmclip/metrics.hpp"

namespace ofdmclip {
namespace {

std::string format(const char* fmt, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

}  // namespace

void ExperimentSpec::validate() const {
  ofdm.validate();
  clip.validate();
  if (n_symbols < 1) throw std::invalid_argument("symbol count must be >= 1");
  if (command == Command::Ser) {
    if (snr_grid.empty()) throw std::invalid_argument("SNR grid is empty");
    if (!std::is_sorted(snr_grid.begin(), snr_grid.end())) {
      throw std::invalid_argument("SNR grid must be ascending");
    }
  }
  if (command == Command::WindowSweep && clip.strategy != ClipStrategy::PeakWindow) {
    throw std::invalid_argument("window-sweep needs the peak-window strategy (--clip pw)");
  }
  if (output_path.empty()) throw std::invalid_argument("output path is empty");
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("grid step must be positive");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw std::invalid_argument("grid bounds must be finite");
  std::vector<double> grid;
  for (long i = 0;; ++i) {
    const double v = start + static_cast<double>(i) * step;
    if (v > stop + 1e-9 * std::max(1.0, std::abs(stop))) break;
    grid.push_back(v);
  }
  return grid;
}

ExperimentOutput run_ccdf(const ExperimentSpec& spec) {
  spec.validate();
  const auto papr = simulate_papr(spec.ofdm, spec.clip, spec.n_symbols, spec.seed, spec.threads);
  const auto curve = estimate_ccdf(papr, default_ccdf_thresholds());
  return {ccdf_csv(curve),
          format("mean_papr_db=%.4f ccdf1e-3_papr_db=%.4f", mean(papr), ccdf_level_db(papr, 1e-3)) +
              " symbols=" + std::to_string(spec.n_symbols)};
}

ExperimentOutput run_ser(const ExperimentSpec& spec) {
  spec.validate();
  std::optional<ClipConfig> clip;
  if (spec.clip.iterations > 0) clip = spec.clip;
  std::vector<SerPoint> points;
  points.reserve(spec.snr_grid.size());
  for (double snr : spec.snr_grid) {
    points.push_back(measure_ser(spec.ofdm, clip, snr, spec.n_symbols, spec.seed, spec.threads));
  }
  return {ser_csv(points), "points=" + std::to_string(points.size()) +
                               " symbols_per_point=" + std::to_string(points.front().symbols_sent)};
}

const std::vector<WindowType>& sweep_windows() {
  static const std::vector<WindowType> kinds{WindowType::Kaiser, WindowType::Blackman, WindowType::Hanning,
                                             WindowType::Hamming, WindowType::Flattop};
  return kinds;
}

ExperimentOutput run_window_sweep(const ExperimentSpec& spec) {
  spec.validate();
  std::string csv = "window,mean_papr_db,ccdf3_papr_db\n";
  for (WindowType type : sweep_windows()) {
    ClipConfig clip = spec.clip;
    clip.window.type = type;
    const auto papr = simulate_papr(spec.ofdm, clip, spec.n_symbols, spec.seed, spec.threads);
    csv += std::string(window_name(type)) + format(",%.6f,%.6f\n", mean(papr), ccdf_level_db(papr, 1e-3));
  }
  const auto baseline = simulate_papr(spec.ofdm, std::nullopt, spec.n_symbols, spec.seed, spec.threads);
  return {csv, format("unclipped mean_papr_db=%.4f ccdf1e-3_papr_db=%.4f", mean(baseline),
                      ccdf_level_db(baseline, 1e-3))};
}

ExperimentOutput run(const ExperimentSpec& spec) {
  switch (spec.command) {
    case Command::Ccdf: return run_ccdf(spec);
    case Command::Ser: return run_ser(spec);
    case Command::WindowSweep: return run_window_sweep(spec);
  }
  throw std::logic_error("unknown command");
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << text;
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("failed writing '" + path + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot move output into place at '" + path + "': " + ec.message());
  }
}

}  // namespace ofdmclip
