#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ofdmclip/types.hpp"

namespace ofdmclip {

using Bit = std::uint8_t;

bool is_supported_order(int order);

// Gray-labelled constellation with unit average energy.
//
// Symbol labels are the bit groups read most-significant bit first. Square
// QAM (M = 4, 16, 64) splits the label into an in-phase half (high bits) and a
// quadrature half (low bits), each reflected-Gray coded along its axis with
// label 0 on the most positive level. 8-QAM is the 4x2 grid {+-1, +-3} x {+-1}
// with two in-phase bits and one quadrature bit. BPSK maps 0 -> +1, 1 -> -1.
class Constellation {
 public:
  // Throws std::invalid_argument for M outside {2, 4, 8, 16, 64}.
  explicit Constellation(int order);

  int order() const { return order_; }
  int bits_per_symbol() const { return bits_; }

  // Indexed by label.
  std::span<const Complex> points() const { return points_; }
  Complex point(unsigned label) const { return points_.at(label); }

  // Minimum Euclidean distance; ties go to the lowest label.
  unsigned nearest(Complex received) const;

 private:
  int order_;
  int bits_;
  ComplexVector points_;
};

// Process-wide immutable instance for `order`.
const Constellation& constellation(int order);

std::vector<Complex> map_bits(std::span<const Bit> bits, int order);
std::vector<Bit> demap_points(std::span<const Complex> received, int order);

std::vector<Complex> map_labels(std::span<const unsigned> labels, int order);
std::vector<unsigned> decide_labels(std::span<const Complex> received, int order);

}  // namespace ofdmclip
