#include "ofdmclip/modulation.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ofdmclip {
namespace {

unsigned gray(unsigned v) { return v ^ (v >> 1); }

// Amplitudes of a 2^bits-level axis indexed by Gray label: position p (p = 0
// most positive) sits at 2^bits - 1 - 2p and carries label gray(p).
std::vector<double> axis_levels(int bits) {
  const unsigned levels = 1u << bits;
  std::vector<double> by_label(levels);
  for (unsigned p = 0; p < levels; ++p) {
    by_label[gray(p)] = static_cast<double>(levels) - 1.0 - 2.0 * p;
  }
  return by_label;
}

int log2_order(int order) {
  switch (order) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    case 16: return 4;
    case 64: return 6;
    default:
      throw std::invalid_argument("unsupported modulation order " + std::to_string(order) +
                                  " (expected 2, 4, 8, 16 or 64)");
  }
}

}  // namespace

bool is_supported_order(int order) {
  return order == 2 || order == 4 || order == 8 || order == 16 || order == 64;
}

Constellation::Constellation(int order) : order_(order), bits_(log2_order(order)), points_(order) {
  if (order == 2) {
    points_ = {Complex{1.0, 0.0}, Complex{-1.0, 0.0}};
    return;
  }
  const int i_bits = (bits_ + 1) / 2;  // 8-QAM: two in-phase bits, one quadrature
  const int q_bits = bits_ - i_bits;
  const auto i_levels = axis_levels(i_bits);
  const auto q_levels = axis_levels(q_bits);
  double energy = 0.0;
  for (unsigned label = 0; label < static_cast<unsigned>(order); ++label) {
    const unsigned i_label = label >> q_bits;
    const unsigned q_label = label & ((1u << q_bits) - 1u);
    points_[label] = {i_levels[i_label], q_levels[q_label]};
    energy += std::norm(points_[label]);
  }
  const double scale = 1.0 / std::sqrt(energy / order);
  for (auto& p : points_) p *= scale;
}

unsigned Constellation::nearest(Complex received) const {
  unsigned best = 0;
  double best_distance = std::norm(received - points_[0]);
  for (unsigned label = 1; label < points_.size(); ++label) {
    const double d = std::norm(received - points_[label]);
    if (d < best_distance) {
      best_distance = d;
      best = label;
    }
  }
  return best;
}

const Constellation& constellation(int order) {
  static const std::array<Constellation, 5> table{Constellation(2), Constellation(4),
                                                  Constellation(8), Constellation(16),
                                                  Constellation(64)};
  switch (order) {
    case 2: return table[0];
    case 4: return table[1];
    case 8: return table[2];
    case 16: return table[3];
    case 64: return table[4];
    default: log2_order(order);  // throws
  }
  throw std::logic_error("unreachable");
}

std::vector<Complex> map_bits(std::span<const Bit> bits, int order) {
  const auto& c = constellation(order);
  const auto k = static_cast<std::size_t>(c.bits_per_symbol());
  if (bits.size() % k != 0) {
    throw std::invalid_argument("bit count " + std::to_string(bits.size()) +
                                " is not a multiple of " + std::to_string(k));
  }
  std::vector<Complex> out;
  out.reserve(bits.size() / k);
  for (std::size_t i = 0; i < bits.size(); i += k) {
    unsigned label = 0;
    for (std::size_t b = 0; b < k; ++b) label = (label << 1) | (bits[i + b] ? 1u : 0u);
    out.push_back(c.point(label));
  }
  return out;
}

std::vector<Bit> demap_points(std::span<const Complex> received, int order) {
  const auto& c = constellation(order);
  const int k = c.bits_per_symbol();
  std::vector<Bit> out;
  out.reserve(received.size() * static_cast<std::size_t>(k));
  for (const auto& r : received) {
    const unsigned label = c.nearest(r);
    for (int b = k - 1; b >= 0; --b) out.push_back(static_cast<Bit>((label >> b) & 1u));
  }
  return out;
}

std::vector<Complex> map_labels(std::span<const unsigned> labels, int order) {
  const auto& c = constellation(order);
  std::vector<Complex> out;
  out.reserve(labels.size());
  for (unsigned l : labels) out.push_back(c.point(l));
  return out;
}

std::vector<unsigned> decide_labels(std::span<const Complex> received, int order) {
  const auto& c = constellation(order);
  std::vector<unsigned> out;
  out.reserve(received.size());
  for (const auto& r : received) out.push_back(c.nearest(r));
  return out;
}

}  // namespace ofdmclip
