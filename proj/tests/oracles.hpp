#pragma once

// Reference computations used only by the tests. Each one is written from the
// textbook definition and shares no code with the library path it checks.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

// O(N^2) DFT. sign = -1 forward, +1 inverse; scaled by 1/sqrt(N).
inline std::vector<Complex> direct_dft(const std::vector<Complex>& x, int sign) {
  const std::size_t n = x.size();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
      const double phase = sign * 2.0 * std::numbers::pi * static_cast<double>((k * m) % n) / static_cast<double>(n);
      acc += x[m] * Complex{std::cos(phase), std::sin(phase)};
    }
    out[k] = acc / std::sqrt(static_cast<double>(n));
  }
  return out;
}

// Continuous-time OFDM envelope at fractional sample position m of an
// N-subcarrier symbol: 1/sqrt(N) sum_k X_k exp(j 2 pi k' m / N), k' signed.
inline Complex ofdm_envelope(const std::vector<Complex>& bins, double m) {
  const auto n = static_cast<long>(bins.size());
  Complex acc = 0.0;
  for (long k = 0; k < n; ++k) {
    const long signed_k = k < n / 2 ? k : k - n;
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(signed_k) * m / static_cast<double>(n);
    acc += bins[static_cast<std::size_t>(k)] * Complex{std::cos(phase), std::sin(phase)};
  }
  return acc / std::sqrt(static_cast<double>(n));
}

inline double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

// Exact QPSK SER for Es/N0 = snr (linear).
inline double qpsk_ser(double snr_linear) {
  const double q = q_function(std::sqrt(snr_linear));
  return 2.0 * q - q * q;
}

// Nyquist-rate CCDF approximation, gamma in linear power units.
inline double ccdf_nyquist(double gamma, int subcarriers) {
  return 1.0 - std::pow(1.0 - std::exp(-gamma), subcarriers);
}

inline double binomial_se(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

// I0 by its power series, summed until the term falls below 1e-16.
inline double bessel_i0_series(double x) {
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; term >= 1e-16 * (sum + term); ++k) {
    sum += term;
    term *= (x * x / 4.0) / (static_cast<double>(k) * k);
  }
  return sum + term;
}

inline std::vector<Complex> random_complex(std::size_t n, unsigned seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, scale);
  std::vector<Complex> x(n);
  for (auto& v : x) v = {g(rng), g(rng)};
  return x;
}

}  // namespace oracle
