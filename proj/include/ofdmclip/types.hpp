#pragma once

#include <complex>
#include <vector>

namespace ofdmclip {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// One OFDM symbol in the frequency domain: constellation point X_k on each of
// the N subcarriers, natural FFT order (k = 0 is DC).
struct FreqSymbol {
  ComplexVector bins;
};

// One (possibly oversampled) OFDM symbol in the time domain, N*L samples.
struct TimeSignal {
  ComplexVector samples;
};

}  // namespace ofdmclip
