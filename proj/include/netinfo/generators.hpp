// Named distribution families used across the test corpus and the CLI.
#ifndef NETINFO_GENERATORS_HPP
#define NETINFO_GENERATORS_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "netinfo/joint_distribution.hpp"

namespace netinfo {

namespace detail {
inline void require_prob(double p, const std::string& what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(what + " must lie in [0,1], got " + std::to_string(p));
}
}  // namespace detail

// 1/4 each on {000, 011, 101, 110}: independent X, Y with Z = X xor Y.
inline JointDistribution fig1_distribution() {
  return from_points({"X", "Y", "Z"}, {2, 2, 2},
                     {{{0, 0, 0}, 0.25}, {{0, 1, 1}, 0.25}, {{1, 0, 1}, 0.25}, {{1, 1, 0}, 0.25}});
}

// The four-variable lift of fig1: (X,Z1) and (Y,Z2) perfectly correlated pairs.
inline JointDistribution eq11_distribution() {
  return from_points({"X", "Y", "Z1", "Z2"}, {2, 2, 2, 2},
                     {{{0, 0, 0, 0}, 0.25}, {{0, 1, 0, 1}, 0.25},
                      {{1, 0, 1, 0}, 0.25}, {{1, 1, 1, 1}, 0.25}});
}

// Eight equiprobable points over 4-valued X, Y, Z; splits into a perfectly
// correlated bit pair times the eq11-style remainder under binary expansion.
inline JointDistribution eq14_distribution() {
  std::vector<std::pair<Outcome, double>> pts;
  for (Outcome o : std::vector<Outcome>{{0, 0, 0}, {0, 1, 1}, {1, 0, 2}, {1, 1, 3},
                                        {2, 2, 0}, {2, 3, 1}, {3, 2, 2}, {3, 3, 3}})
    pts.emplace_back(o, 0.125);
  return from_points({"X", "Y", "Z"}, {4, 4, 4}, pts);
}

// a[000] + (1-a)[111]
inline JointDistribution ghz_type(double a) {
  detail::require_prob(a, "ghz_type: a");
  return from_points({"X", "Y", "Z"}, {2, 2, 2}, {{{0, 0, 0}, a}, {{1, 1, 1}, 1.0 - a}});
}

// a[001] + b[010] + (1-a-b)[100]
inline JointDistribution w_type(double a, double b) {
  detail::require_prob(a, "w_type: a");
  detail::require_prob(b, "w_type: b");
  if (a + b > 1.0 + 1e-15) throw std::invalid_argument("w_type: a + b exceeds 1");
  return from_points({"X", "Y", "Z"}, {2, 2, 2},
                     {{{0, 0, 1}, a}, {{0, 1, 0}, b}, {{1, 0, 0}, 1.0 - a - b}});
}

// p * (1/2)([000]+[111]) + (1-p) * (1/3)([001]+[010]+[100])
inline JointDistribution ghz_w_mixture(double p) {
  detail::require_prob(p, "ghz_w_mixture: p");
  return from_points({"X", "Y", "Z"}, {2, 2, 2},
                     {{{0, 0, 0}, p / 2}, {{1, 1, 1}, p / 2},
                      {{0, 0, 1}, (1 - p) / 3}, {{0, 1, 0}, (1 - p) / 3},
                      {{1, 0, 0}, (1 - p) / 3}});
}

// The six four-point binary families EE0a..EE0f (weights a,b,c,d in order).
inline JointDistribution w4(const std::string& kind, double a, double b, double c, double d) {
  for (auto [v, n] : {std::pair{a, "a"}, {b, "b"}, {c, "c"}, {d, "d"}})
    detail::require_prob(v, std::string("w4: ") + n);
  if (std::abs(a + b + c + d - 1.0) > 1e-9)
    throw std::invalid_argument("w4: weights must sum to 1");
  std::vector<Outcome> support;
  if (kind == "EE0a") support = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1}};
  else if (kind == "EE0b") support = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}};
  else if (kind == "EE0c") support = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}};
  else if (kind == "EE0d") support = {{0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}};
  else if (kind == "EE0e") support = {{0, 0, 1}, {0, 1, 0}, {1, 0, 1}, {1, 1, 0}};
  else if (kind == "EE0f") support = {{0, 0, 1}, {0, 1, 1}, {1, 0, 0}, {1, 1, 0}};
  else throw std::invalid_argument("w4: unknown kind " + kind);
  return from_points({"X", "Y", "Z"}, {2, 2, 2},
                     {{support[0], a}, {support[1], b}, {support[2], c}, {support[3], d}});
}

// Star network outcome table over (X1..Xn, Y): leaves draw independently,
// the hub records the full tuple. leaf_probs is n concatenated distributions
// of length d each; empty means uniform.
inline JointDistribution star_example(int n, int d, const std::vector<double>& leaf_probs = {}) {
  if (n < 2) throw std::invalid_argument("star_example: need n >= 2 leaves");
  if (d < 2) throw std::invalid_argument("star_example: need alphabet size >= 2");
  std::vector<std::vector<double>> ps(static_cast<std::size_t>(n),
                                      std::vector<double>(static_cast<std::size_t>(d),
                                                          1.0 / static_cast<double>(d)));
  if (!leaf_probs.empty()) {
    if (leaf_probs.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(d))
      throw std::invalid_argument("star_example: expected n*d leaf probabilities");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j)
        ps[i][j] = leaf_probs[static_cast<std::size_t>(i * d + j)];
  }
  std::vector<std::string> names;
  std::vector<int> cards;
  for (int i = 0; i < n; ++i) {
    names.push_back("X" + std::to_string(i + 1));
    cards.push_back(d);
  }
  names.push_back("Y");
  std::size_t ycard = 1;
  for (int i = 0; i < n; ++i) ycard *= static_cast<std::size_t>(d);
  cards.push_back(static_cast<int>(ycard));

  std::vector<std::pair<Outcome, double>> pts;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    double w = 1.0;
    std::size_t y = 0;
    for (int i = 0; i < n; ++i) {
      w *= ps[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[i])];
      y = y * static_cast<std::size_t>(d) + static_cast<std::size_t>(idx[i]);
    }
    Outcome o(idx.begin(), idx.end());
    o.push_back(static_cast<int>(y));
    if (w > 0.0) pts.emplace_back(o, w);
    int k = n - 1;
    while (k >= 0 && ++idx[k] == d) idx[k--] = 0;
    if (k < 0) break;
  }
  return from_points(names, cards, pts);
}

// Triangle network outcome table: three independent indices i, j, k with
// X = (i,j), Y = (j,k), Z = (k,i), each encoded as a single symbol.
inline JointDistribution triangle_example(int dp, int dq, int dr,
                                          const std::vector<double>& probs = {}) {
  if (dp < 1 || dq < 1 || dr < 1)
    throw std::invalid_argument("triangle_example: alphabet sizes must be positive");
  auto uni = [](int d) {
    return std::vector<double>(static_cast<std::size_t>(d), 1.0 / static_cast<double>(d));
  };
  std::vector<double> p = uni(dp), q = uni(dq), r = uni(dr);
  if (!probs.empty()) {
    if (probs.size() != static_cast<std::size_t>(dp + dq + dr))
      throw std::invalid_argument("triangle_example: expected dp+dq+dr probabilities");
    p.assign(probs.begin(), probs.begin() + dp);
    q.assign(probs.begin() + dp, probs.begin() + dp + dq);
    r.assign(probs.begin() + dp + dq, probs.end());
  }
  std::vector<std::pair<Outcome, double>> pts;
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j < dq; ++j)
      for (int k = 0; k < dr; ++k) {
        const double w = p[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j)] *
                         r[static_cast<std::size_t>(k)];
        if (w > 0.0)
          pts.emplace_back(Outcome{i * dq + j, j * dr + k, k * dp + i}, w);
      }
  return from_points({"X", "Y", "Z"}, {dp * dq, dq * dr, dr * dp}, pts);
}

// Dispatch by family name with a flat numeric parameter list.
inline JointDistribution generate(const std::string& family,
                                  const std::vector<double>& params = {},
                                  const std::string& kind = "") {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("generate " + family + ": expected " + std::to_string(n) +
                                  " parameter(s), got " + std::to_string(params.size()));
  };
  if (family == "fig1") { need(0); return fig1_distribution(); }
  if (family == "eq11") { need(0); return eq11_distribution(); }
  if (family == "eq14") { need(0); return eq14_distribution(); }
  if (family == "ghz_type") { need(1); return ghz_type(params[0]); }
  if (family == "w_type") { need(2); return w_type(params[0], params[1]); }
  if (family == "ghz_w_mixture") { need(1); return ghz_w_mixture(params[0]); }
  if (family == "w4") {
    need(4);
    if (kind.empty()) throw std::invalid_argument("generate w4: missing kind (EE0a..EE0f)");
    return w4(kind, params[0], params[1], params[2], params[3]);
  }
  if (family == "star_example") {
    if (params.size() < 2) throw std::invalid_argument("generate star_example: need n and d");
    const int n = static_cast<int>(params[0]), d = static_cast<int>(params[1]);
    return star_example(n, d, {params.begin() + 2, params.end()});
  }
  if (family == "triangle_example") {
    if (params.size() < 3)
      throw std::invalid_argument("generate triangle_example: need three alphabet sizes");
    const int dp = static_cast<int>(params[0]), dq = static_cast<int>(params[1]),
              dr = static_cast<int>(params[2]);
    return triangle_example(dp, dq, dr, {params.begin() + 3, params.end()});
  }
  throw std::invalid_argument("generate: unknown family " + family);
}

}  // namespace netinfo

#endif  // NETINFO_GENERATORS_HPP
