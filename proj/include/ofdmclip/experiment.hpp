#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ofdmclip/crest_reduction.hpp"
#include "ofdmclip/random.hpp"
#include "ofdmclip/transform.hpp"

namespace ofdmclip {

enum class Command { Ccdf, Ser, WindowSweep };

struct ExperimentSpec {
  Command command = Command::Ccdf;
  OfdmConfig ofdm{};
  ClipConfig clip{};
  std::vector<double> snr_grid;
  std::size_t n_symbols = 10000;
  RngSeed seed{};
  std::string output_path = "-";
  unsigned threads = 0;  // 0: hardware concurrency; never changes the output

  // Throws std::invalid_argument describing the first problem found.
  void validate() const;
};

struct ExperimentOutput {
  std::string csv;
  std::string summary;
};

// start, start + step, ... up to stop (inclusive, with a small tolerance).
// Empty when start > stop; throws when step <= 0.
std::vector<double> make_grid(double start, double stop, double step);

ExperimentOutput run_ccdf(const ExperimentSpec& spec);
ExperimentOutput run_ser(const ExperimentSpec& spec);
ExperimentOutput run_window_sweep(const ExperimentSpec& spec);
ExperimentOutput run(const ExperimentSpec& spec);

// Kaiser, Blackman, Hanning, Hamming, Flattop.
const std::vector<WindowType>& sweep_windows();

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes `text` to `path` through a temporary file in the same directory and
// a rename, so a failed run never leaves a partial file behind. "-" writes
// to stdout.
void write_output(const std::string& path, const std::string& text);

}  // namespace ofdmclip
