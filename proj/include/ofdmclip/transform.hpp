#pragma once

#include <cstddef>
#include <span>

#include "ofdmclip/types.hpp"

namespace ofdmclip {

bool is_power_of_two(std::size_t n);

struct OfdmConfig {
  int subcarriers = 64;  // N
  int oversample = 4;    // L
  int mod_order = 8;     // M

  std::size_t samples() const { return static_cast<std::size_t>(subcarriers) * oversample; }

  // Throws std::invalid_argument unless N is a power of two >= 2,
  // L is one of {1, 2, 4, 8} and M is a supported constellation order.
  void validate() const;
};

// Iterative radix-2 FFT plan. Unscaled in both directions; the twiddle and
// bit-reversal tables are fixed at construction so one plan can be shared
// between threads.
class Fft {
 public:
  explicit Fft(std::size_t size);

  std::size_t size() const { return size_; }

  // X[k] = sum_n x[n] exp(-j 2 pi k n / size)
  void forward(std::span<Complex> data) const;
  // x[n] = sum_k X[k] exp(+j 2 pi k n / size)
  void inverse(std::span<Complex> data) const;

 private:
  void transform(std::span<Complex> data, bool inverse) const;

  std::size_t size_;
  std::vector<std::size_t> bit_reverse_;
  ComplexVector twiddles_;  // exp(-j 2 pi i / size), i < size / 2
};

// Shared plan for the given power-of-two size, built on first use.
const Fft& fft_plan(std::size_t size);

// Unitary IDFT of the center-zero-padded spectrum: bins 0..N/2-1 stay at the
// bottom, bins N/2..N-1 move to the top of an N*L grid. Energy is preserved.
TimeSignal synthesize(const FreqSymbol& symbol, int oversample);

// Unitary forward DFT of a time signal. Returns the full N*L spectrum.
ComplexVector analyze(const TimeSignal& signal);

// Unitary inverse DFT of a full N*L spectrum; inverse of analyze().
TimeSignal synthesize_spectrum(std::span<const Complex> spectrum);

// Pulls the N in-band bins back out of an N*L spectrum, undoing the
// placement done by synthesize().
FreqSymbol extract_in_band(std::span<const Complex> spectrum, int subcarriers);

// True when the spectrum position `index` of an N*L grid carries a subcarrier.
bool is_in_band(std::size_t index, std::size_t total, int subcarriers);

}  // namespace ofdmclip
