// Finite stochastic maps (column-stochastic matrices) between outcome
// alphabets, plus the handful of named transforms used throughout: the
// uniformizing map, binary symmetric doubly stochastic rotations, and the
// circulant doubly stochastic matrices of the Birkhoff argument.
#ifndef NETINFO_CHANNEL_HPP
#define NETINFO_CHANNEL_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace netinfo {

struct Channel {
  int in_card = 0;
  int out_card = 0;
  std::vector<double> matrix;  // row-major, out_card x in_card

  double at(int out, int in) const {
    return matrix[static_cast<std::size_t>(out) * static_cast<std::size_t>(in_card) +
                  static_cast<std::size_t>(in)];
  }
  double& at(int out, int in) {
    return matrix[static_cast<std::size_t>(out) * static_cast<std::size_t>(in_card) +
                  static_cast<std::size_t>(in)];
  }
};

// Column stochasticity within 1e-12, all entries non-negative.
inline void validate(const Channel& ch, double tol = 1e-12) {
  if (ch.in_card <= 0 || ch.out_card <= 0)
    throw std::invalid_argument("channel: non-positive cardinality");
  if (ch.matrix.size() != static_cast<std::size_t>(ch.in_card) *
                              static_cast<std::size_t>(ch.out_card))
    throw std::invalid_argument("channel: matrix shape mismatch");
  for (double v : ch.matrix)
    if (v < 0.0 || !std::isfinite(v))
      throw std::invalid_argument("channel: invalid entry");
  for (int j = 0; j < ch.in_card; ++j) {
    double s = 0.0;
    for (int i = 0; i < ch.out_card; ++i) s += ch.at(i, j);
    if (std::abs(s - 1.0) > tol)
      throw std::invalid_argument("channel: column " + std::to_string(j) +
                                  " sums to " + std::to_string(s));
  }
}

// A doubly stochastic channel is additionally square with unit row sums.
inline bool is_doubly_stochastic(const Channel& ch, double tol = 1e-12) {
  if (ch.in_card != ch.out_card) return false;
  for (int i = 0; i < ch.out_card; ++i) {
    double s = 0.0;
    for (int j = 0; j < ch.in_card; ++j) s += ch.at(i, j);
    if (std::abs(s - 1.0) > tol) return false;
  }
  return true;
}

inline Channel identity_channel(int card) {
  Channel ch{card, card, std::vector<double>(static_cast<std::size_t>(card) * card, 0.0)};
  for (int i = 0; i < card; ++i) ch.at(i, i) = 1.0;
  return ch;
}

// Maps every input to the uniform distribution over out_card symbols.
// With out_card = 2 this is the uniformizing map T: [i] -> (1/2)[0] + (1/2)[1].
inline Channel uniformizer_channel(int in_card, int out_card = 2) {
  Channel ch{in_card, out_card,
             std::vector<double>(static_cast<std::size_t>(in_card) * out_card,
                                 1.0 / static_cast<double>(out_card))};
  return ch;
}

// 2x2 doubly stochastic rotation [[cos^2 g, sin^2 g], [sin^2 g, cos^2 g]].
inline Channel binary_symmetric_channel(double gamma) {
  const double c = std::cos(gamma) * std::cos(gamma);
  const double s = 1.0 - c;
  return Channel{2, 2, {c, s, s, c}};
}

// Circulant doubly stochastic matrix whose `anchor` row equals v (each row is
// a cyclic shift of v, so all rows and columns sum to sum(v) = 1). This is the
// explicit matrix form of a distribution-valued post-processing rule: kept
// for verification of the construction, not used on the evaluation path.
inline Channel circulant_doubly_stochastic(const std::vector<double>& v, int anchor) {
  const int n = static_cast<int>(v.size());
  if (n <= 0) throw std::invalid_argument("circulant: empty vector");
  if (anchor < 0 || anchor >= n) throw std::invalid_argument("circulant: anchor out of range");
  Channel ch{n, n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      ch.at(r, c) = v[static_cast<std::size_t>(((c - r + anchor) % n + n) % n)];
  return ch;
}

}  // namespace netinfo

#endif  // NETINFO_CHANNEL_HPP
