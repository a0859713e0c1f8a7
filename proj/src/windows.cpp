#include "ofdmclip/windows.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

namespace ofdmclip {
namespace {

constexpr double kFlattop[5] = {0.21557895, 0.41663158, 0.277263158, 0.083578947, 0.006947368};

double cosine_sum(std::span<const double> a, int n, int length) {
  const double phase = 2.0 * std::numbers::pi * n / (length - 1);
  double sum = 0.0;
  double sign = 1.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sum += sign * a[k] * std::cos(static_cast<double>(k) * phase);
    sign = -sign;
  }
  return sum;
}

}  // namespace

void WindowKind::validate() const {
  if (type == WindowType::Kaiser && !(std::isfinite(kaiser_beta) && kaiser_beta >= 0.0)) {
    throw std::invalid_argument("Kaiser beta must be finite and >= 0");
  }
}

double bessel_i0(double x) {
  if (!std::isfinite(x) || std::abs(x) >= 700.0) {
    throw std::invalid_argument("bessel_i0 argument out of range: " + std::to_string(x));
  }
  // sum_k ((x/2)^2)^k / (k!)^2, every term positive
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; term > 1e-17 * sum; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
  }
  return sum;
}

std::vector<double> window(const WindowKind& kind, int length) {
  if (length < 1) {
    throw std::invalid_argument("window length must be >= 1, got " + std::to_string(length));
  }
  kind.validate();
  std::vector<double> w(static_cast<std::size_t>(length), 1.0);
  if (length == 1) return w;

  const double kaiser_norm = kind.type == WindowType::Kaiser ? bessel_i0(kind.kaiser_beta) : 1.0;
  auto coefficient = [&](int n) -> double {
    switch (kind.type) {
      case WindowType::Rectangular:
        return 1.0;
      case WindowType::Hanning:
        return 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * n / (length - 1)));
      case WindowType::Hamming:
        return 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * n / (length - 1));
      case WindowType::Blackman: {
        const double phase = 2.0 * std::numbers::pi * n / (length - 1);
        // exact zero at the ends; rounding lands a hair below it
        return std::max(0.0, 0.42 - 0.5 * std::cos(phase) + 0.08 * std::cos(2.0 * phase));
      }
      case WindowType::Kaiser: {
        const double r = 2.0 * n / (length - 1) - 1.0;
        return bessel_i0(kind.kaiser_beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / kaiser_norm;
      }
      case WindowType::Flattop:
        return cosine_sum(kFlattop, n, length);
    }
    return 1.0;
  };

  // Evaluate the first half and mirror so w[n] == w[W-1-n] exactly.
  for (int n = 0; n <= (length - 1) / 2; ++n) {
    const double v = coefficient(n);
    w[static_cast<std::size_t>(n)] = v;
    w[static_cast<std::size_t>(length - 1 - n)] = v;
  }
  if (kind.type == WindowType::Flattop) {
    // The series peaks at sum(a) = 1.000000003 in the middle; scale that to 1.
    double peak = 0.0;
    for (double a : kFlattop) peak += a;
    for (auto& v : w) v /= peak;
    if (length % 2 == 1) w[static_cast<std::size_t>(length / 2)] = 1.0;
  }
  return w;
}

WindowType parse_window_type(std::string_view name) {
  if (name == "rect") return WindowType::Rectangular;
  if (name == "hann") return WindowType::Hanning;
  if (name == "hamming") return WindowType::Hamming;
  if (name == "blackman") return WindowType::Blackman;
  if (name == "kaiser") return WindowType::Kaiser;
  if (name == "flattop") return WindowType::Flattop;
  throw std::invalid_argument("unknown window '" + std::string(name) + "'");
}

std::string_view window_name(WindowType type) {
  switch (type) {
    case WindowType::Rectangular: return "rect";
    case WindowType::Hanning: return "hann";
    case WindowType::Hamming: return "hamming";
    case WindowType::Blackman: return "blackman";
    case WindowType::Kaiser: return "kaiser";
    case WindowType::Flattop: return "flattop";
  }
  return "?";
}

}  // namespace ofdmclip
