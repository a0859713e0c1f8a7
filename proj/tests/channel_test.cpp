#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "ofdmclip/channel.hpp"
#include "ofdmclip/metrics.hpp"

using namespace ofdmclip;

TEST_CASE("awgn") {
  const TimeSignal x{oracle::random_complex(1024, 1)};
  CHECK(awgn(x, kNoiseless, RngSeed{1}, 0).samples == x.samples);
  CHECK(awgn(x, 5.0, RngSeed{1}, 3).samples == awgn(x, 5.0, RngSeed{1}, 3).samples);
  CHECK(awgn(x, 5.0, RngSeed{1}, 3).samples != awgn(x, 5.0, RngSeed{1}, 4).samples);
  CHECK_THROWS_AS(awgn(TimeSignal{ComplexVector(8)}, 5.0, RngSeed{1}, 0), std::invalid_argument);
}

TEST_CASE("awgn noise variance matches the target within 1%") {
  // Unit-power constant signal; 10^6 noise samples at 7 dB.
  const TimeSignal x{ComplexVector(1'000'000, Complex{1.0, 0.0})};
  const double snr_db = 7.0;
  const auto y = awgn(x, snr_db, RngSeed{77}, 0);
  double re2 = 0.0;
  double im2 = 0.0;
  for (std::size_t i = 0; i < y.samples.size(); ++i) {
    const Complex e = y.samples[i] - x.samples[i];
    re2 += e.real() * e.real();
    im2 += e.imag() * e.imag();
  }
  const double n = static_cast<double>(y.samples.size());
  const double target = std::pow(10.0, -snr_db / 10.0);
  CHECK(std::abs((re2 + im2) / n - target) / target < 0.01);
  CHECK(std::abs(re2 / im2 - 1.0) < 0.02);
}

TEST_CASE("measure_ser: no noise, no errors") {
  for (int m : {2, 4, 8, 16, 64}) {
    const auto p = measure_ser(OfdmConfig{64, 4, m}, std::nullopt, 100.0, 50, RngSeed{1});
    CHECK(p.symbol_errors == 0);
    CHECK(p.symbols_sent == 50u * 64u);
    CHECK(p.ser == 0.0);
  }
}

TEST_CASE("measure_ser follows the QPSK closed form") {
  // 2e5 constellation symbols; 5% relative is several standard errors here
  // only down to SER ~ 1e-2, so stop at 6 dB.
  for (double snr : {0.0, 2.0, 4.0, 6.0}) {
    for (int l : {1, 4}) {
      const auto p = measure_ser(OfdmConfig{64, l, 4}, std::nullopt, snr, 3125, RngSeed{2});
      const double expected = oracle::qpsk_ser(std::pow(10.0, snr / 10.0));
      CHECK(std::abs(p.ser - expected) / expected < 0.05);
    }
  }
}

TEST_CASE("measure_ser is independent of the thread count") {
  ClipConfig clip;
  const auto a = measure_ser(OfdmConfig{64, 4, 16}, clip, 12.0, 200, RngSeed{5}, 1);
  const auto b = measure_ser(OfdmConfig{64, 4, 16}, clip, 12.0, 200, RngSeed{5}, 3);
  CHECK(a.symbol_errors == b.symbol_errors);
  CHECK(a.ser == b.ser);
}

TEST_CASE("measure_ser errors") {
  CHECK_THROWS_AS(measure_ser(OfdmConfig{64, 4, 4}, std::nullopt, 10.0, 0, RngSeed{1}), std::invalid_argument);
  CHECK_THROWS_AS(measure_ser(OfdmConfig{60, 4, 4}, std::nullopt, 10.0, 1, RngSeed{1}), std::invalid_argument);
}

TEST_CASE("ser_csv layout") {
  const SerPoint pts[] = {{10.0, 640, 3, 3.0 / 640.0}};
  CHECK(ser_csv(pts) == "snr_db,symbols,errors,ser\n10.0000,640,3,0.0046875\n");
}

TEST_CASE("property: SER does not rise with SNR beyond sampling noise") {
  ClipConfig clip;
  SerPoint previous{};
  bool first = true;
  for (double snr = 0.0; snr <= 20.0; snr += 2.0) {
    const auto p = measure_ser(OfdmConfig{64, 4, 16}, clip, snr, 1000, RngSeed{8});
    if (!first) {
      const double n = static_cast<double>(p.symbols_sent);
      const double se = std::sqrt(p.ser * (1 - p.ser) / n + previous.ser * (1 - previous.ser) / n);
      CHECK(p.ser <= previous.ser + 2.0 * se);
    }
    previous = p;
    first = false;
  }
}
