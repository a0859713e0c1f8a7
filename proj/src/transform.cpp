#include "ofdmclip/transform.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ofdmclip/modulation.hpp"

namespace ofdmclip {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void OfdmConfig::validate() const {
  if (subcarriers < 2 || !is_power_of_two(static_cast<std::size_t>(subcarriers))) {
    throw std::invalid_argument("subcarrier count must be a power of two >= 2, got " +
                                std::to_string(subcarriers));
  }
  if (oversample != 1 && oversample != 2 && oversample != 4 && oversample != 8) {
    throw std::invalid_argument("oversampling factor must be 1, 2, 4 or 8, got " +
                                std::to_string(oversample));
  }
  if (!is_supported_order(mod_order)) {
    throw std::invalid_argument("unsupported modulation order " + std::to_string(mod_order));
  }
}

Fft::Fft(std::size_t size) : size_(size), bit_reverse_(size), twiddles_(size / 2) {
  if (!is_power_of_two(size)) {
    throw std::invalid_argument("FFT size must be a power of two, got " + std::to_string(size));
  }
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < size) ++bits;
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b) {
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    }
    bit_reverse_[i] = r;
  }
  for (std::size_t i = 0; i < size / 2; ++i) {
    const double phase = -2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(size);
    twiddles_[i] = {std::cos(phase), std::sin(phase)};
  }
}

void Fft::forward(std::span<Complex> data) const { transform(data, false); }

void Fft::inverse(std::span<Complex> data) const { transform(data, true); }

void Fft::transform(std::span<Complex> data, bool inverse) const {
  if (data.size() != size_) {
    throw std::invalid_argument("FFT plan of size " + std::to_string(size_) +
                                " applied to " + std::to_string(data.size()) + " samples");
  }
  for (std::size_t i = 0; i < size_; ++i) {
    const std::size_t j = bit_reverse_[i];
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= size_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = size_ / len;
    for (std::size_t start = 0; start < size_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Complex w = twiddles_[k * stride];
        if (inverse) w = std::conj(w);
        const Complex u = data[start + k];
        const Complex v = data[start + k + half] * w;
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
}

const Fft& fft_plan(std::size_t size) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<const Fft>> plans;
  std::lock_guard lock(mutex);
  auto& plan = plans[size];
  if (!plan) plan = std::make_unique<const Fft>(size);
  return *plan;
}

bool is_in_band(std::size_t index, std::size_t total, int subcarriers) {
  const auto half = static_cast<std::size_t>(subcarriers) / 2;
  return index < half || index >= total - half;
}

TimeSignal synthesize(const FreqSymbol& symbol, int oversample) {
  const std::size_t n = symbol.bins.size();
  if (n < 2 || !is_power_of_two(n)) {
    throw std::invalid_argument("symbol length must be a power of two >= 2, got " +
                                std::to_string(n));
  }
  if (oversample < 1 || !is_power_of_two(static_cast<std::size_t>(oversample))) {
    throw std::invalid_argument("oversampling factor must be a power of two, got " +
                                std::to_string(oversample));
  }
  const std::size_t total = n * static_cast<std::size_t>(oversample);
  const std::size_t half = n / 2;
  ComplexVector spectrum(total);
  for (std::size_t k = 0; k < half; ++k) {
    spectrum[k] = symbol.bins[k];
    spectrum[total - half + k] = symbol.bins[half + k];
  }
  return synthesize_spectrum(spectrum);
}

TimeSignal synthesize_spectrum(std::span<const Complex> spectrum) {
  TimeSignal out{ComplexVector(spectrum.begin(), spectrum.end())};
  fft_plan(spectrum.size()).inverse(out.samples);
  const double scale = 1.0 / std::sqrt(static_cast<double>(spectrum.size()));
  for (auto& s : out.samples) s *= scale;
  return out;
}

ComplexVector analyze(const TimeSignal& signal) {
  ComplexVector spectrum = signal.samples;
  fft_plan(spectrum.size()).forward(spectrum);
  const double scale = 1.0 / std::sqrt(static_cast<double>(spectrum.size()));
  for (auto& s : spectrum) s *= scale;
  return spectrum;
}

FreqSymbol extract_in_band(std::span<const Complex> spectrum, int subcarriers) {
  const auto n = static_cast<std::size_t>(subcarriers);
  if (subcarriers < 2 || n > spectrum.size() || spectrum.size() % n != 0) {
    throw std::invalid_argument("cannot extract " + std::to_string(subcarriers) +
                                " bins from a spectrum of " + std::to_string(spectrum.size()));
  }
  const std::size_t half = n / 2;
  FreqSymbol out{ComplexVector(n)};
  for (std::size_t k = 0; k < half; ++k) {
    out.bins[k] = spectrum[k];
    out.bins[half + k] = spectrum[spectrum.size() - half + k];
  }
  return out;
}

}  // namespace ofdmclip
