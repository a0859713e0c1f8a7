#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ofdmclip {

enum class WindowType { Rectangular, Hanning, Hamming, Blackman, Kaiser, Flattop };

struct WindowKind {
  WindowType type = WindowType::Hanning;
  double kaiser_beta = 5.0;  // used only by Kaiser

  void validate() const;
};

// Symmetric window of `length` samples (length 1 gives {1}); odd lengths
// have exactly 1 in the middle. Flattop dips to about -0.07 in its side
// lobes, the other kinds stay within [0, 1].
std::vector<double> window(const WindowKind& kind, int length);

// Modified Bessel function of the first kind, order zero, by power series.
// Throws std::invalid_argument for |x| >= 700 or non-finite x.
double bessel_i0(double x);

// CLI names: rect, hann, hamming, blackman, kaiser, flattop.
WindowType parse_window_type(std::string_view name);
std::string_view window_name(WindowType type);

}  // namespace ofdmclip
