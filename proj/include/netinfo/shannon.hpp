// Exact Shannon information quantities in bits (log base 2), computed from
// marginal sums of a dense joint table. 0 log 0 is 0 by continuity.
#ifndef NETINFO_SHANNON_HPP
#define NETINFO_SHANNON_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "netinfo/joint_distribution.hpp"

namespace netinfo {

// All information quantities below are measured in bits.
using Bits = double;

namespace detail {

inline Bits entropy_of_table(const std::vector<double>& probs) {
  Bits h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

inline void require_disjoint(const std::vector<std::vector<std::string>>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      for (const auto& a : sets[i])
        for (const auto& b : sets[j])
          if (a == b)
            throw std::invalid_argument("variable sets overlap on " + a);
}

inline std::vector<std::string> concat(const std::vector<std::vector<std::string>>& sets) {
  std::vector<std::string> all;
  for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
  return all;
}

}  // namespace detail

inline Bits entropy(const JointDistribution& d, const std::vector<std::string>& subset) {
  return detail::entropy_of_table(marginalize(d, subset).probs);
}

inline Bits entropy(const JointDistribution& d) {
  return detail::entropy_of_table(d.probs);
}

// I(A;B) = H(A) + H(B) - H(A,B)
inline Bits mutual_information(const JointDistribution& d,
                               const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("mutual_information: empty set");
  detail::require_disjoint({a, b});
  return entropy(d, a) + entropy(d, b) - entropy(d, detail::concat({a, b}));
}

// I(A;B|C) = H(A,C) + H(B,C) - H(C) - H(A,B,C); C empty reduces to I(A;B).
inline Bits conditional_mutual_information(const JointDistribution& d,
                                           const std::vector<std::string>& a,
                                           const std::vector<std::string>& b,
                                           const std::vector<std::string>& c) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("conditional_mutual_information: empty set");
  if (c.empty()) return mutual_information(d, a, b);
  detail::require_disjoint({a, b, c});
  return entropy(d, detail::concat({a, c})) + entropy(d, detail::concat({b, c})) -
         entropy(d, c) - entropy(d, detail::concat({a, b, c}));
}

// I(X;Y;Z) = I(X;Y) - I(X;Y|Z). Symmetric in its three arguments.
inline Bits tripartite_information(const JointDistribution& d,
                                   const std::vector<std::string>& x,
                                   const std::vector<std::string>& y,
                                   const std::vector<std::string>& z) {
  detail::require_disjoint({x, y, z});
  return mutual_information(d, x, y) - conditional_mutual_information(d, x, y, z);
}

// Convenience overload for the common tripartite case: uses the
// distribution's three variables in order.
inline Bits tripartite_information(const JointDistribution& d) {
  if (d.arity() != 3)
    throw std::invalid_argument("tripartite_information: expected exactly 3 variables");
  return tripartite_information(d, {d.names[0]}, {d.names[1]}, {d.names[2]});
}

// Inclusion-exclusion multivariate mutual information, optionally conditioned:
//   I(B1;...;Bn | C) = sum over non-empty S of (-1)^(|S|+1) H(B_S | C).
// Two blocks with empty cond reduce to mutual_information.
inline Bits multivariate_information(const JointDistribution& d,
                                     const std::vector<std::vector<std::string>>& blocks,
                                     const std::vector<std::string>& cond = {}) {
  if (blocks.empty()) throw std::invalid_argument("multivariate_information: no blocks");
  for (const auto& b : blocks)
    if (b.empty()) throw std::invalid_argument("multivariate_information: empty block");
  auto all = blocks;
  if (!cond.empty()) all.push_back(cond);
  detail::require_disjoint(all);

  const Bits hc = cond.empty() ? 0.0 : entropy(d, cond);
  const std::size_t n = blocks.size();
  Bits total = 0.0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> vars;
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) {
        vars.insert(vars.end(), blocks[i].begin(), blocks[i].end());
        ++bits;
      }
    vars.insert(vars.end(), cond.begin(), cond.end());
    const Bits h = entropy(d, vars) - hc;
    total += (bits % 2 == 1) ? h : -h;
  }
  return total;
}

}  // namespace netinfo

#endif  // NETINFO_SHANNON_HPP
