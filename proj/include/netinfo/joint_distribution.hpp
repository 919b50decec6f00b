// Dense finite joint probability distributions and their algebra.
//
// A JointDistribution is a named product sample space with a row-major
// probability table (last variable fastest). All operations are pure: they
// validate their inputs, never mutate, and return fresh values, so any
// instance can be shared freely across threads.
#ifndef NETINFO_JOINT_DISTRIBUTION_HPP
#define NETINFO_JOINT_DISTRIBUTION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "netinfo/channel.hpp"

namespace netinfo {

inline constexpr double kDistributionTol = 1e-9;   // sum-to-one tolerance
inline constexpr double kChannelTol = 1e-12;       // column stochasticity

// One point of the sample space: an index per variable.
using Outcome = std::vector<int>;

struct JointDistribution {
  std::vector<std::string> names;
  std::vector<int> cards;
  std::vector<double> probs;  // row-major over outcome tuples

  std::size_t size() const { return probs.size(); }
  int arity() const { return static_cast<int>(names.size()); }

  int index_of(const std::string& name) const {
    for (int i = 0; i < arity(); ++i)
      if (names[i] == name) return i;
    throw std::invalid_argument("unknown variable label: " + name);
  }

  bool has_variable(const std::string& name) const {
    return std::find(names.begin(), names.end(), name) != names.end();
  }

  std::size_t flat_index(const Outcome& o) const {
    if (static_cast<int>(o.size()) != arity())
      throw std::invalid_argument("outcome arity mismatch");
    std::size_t idx = 0;
    for (int i = 0; i < arity(); ++i) {
      if (o[i] < 0 || o[i] >= cards[i])
        throw std::out_of_range("outcome index out of range for variable " + names[i]);
      idx = idx * static_cast<std::size_t>(cards[i]) + static_cast<std::size_t>(o[i]);
    }
    return idx;
  }

  Outcome outcome_at(std::size_t flat) const {
    Outcome o(names.size());
    for (int i = arity() - 1; i >= 0; --i) {
      o[i] = static_cast<int>(flat % static_cast<std::size_t>(cards[i]));
      flat /= static_cast<std::size_t>(cards[i]);
    }
    return o;
  }

  double p(const Outcome& o) const { return probs[flat_index(o)]; }
};

namespace detail {

inline std::size_t table_size(const std::vector<int>& cards) {
  std::size_t n = 1;
  for (int c : cards) {
    if (c <= 0) throw std::invalid_argument("cardinalities must be positive");
    n *= static_cast<std::size_t>(c);
  }
  return n;
}

}  // namespace detail

// Checks all type invariants; throws std::invalid_argument on violation.
inline void validate(const JointDistribution& d, double tol = kDistributionTol) {
  if (d.names.empty() || d.names.size() != d.cards.size())
    throw std::invalid_argument("names and cardinalities must be non-empty and equal length");
  for (std::size_t i = 0; i < d.names.size(); ++i)
    for (std::size_t j = i + 1; j < d.names.size(); ++j)
      if (d.names[i] == d.names[j])
        throw std::invalid_argument("duplicate variable label: " + d.names[i]);
  if (d.probs.size() != detail::table_size(d.cards))
    throw std::invalid_argument("probability table length does not match cardinalities");
  double sum = 0.0;
  for (double p : d.probs) {
    if (p < 0.0) throw std::invalid_argument("negative probability entry");
    if (!std::isfinite(p)) throw std::invalid_argument("non-finite probability entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol)
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum) + ", not 1");
}

inline JointDistribution make_distribution(std::vector<std::string> names,
                                           std::vector<int> cards,
                                           std::vector<double> probs) {
  JointDistribution d{std::move(names), std::move(cards), std::move(probs)};
  validate(d);
  return d;
}

// Builds a distribution from a sparse list of (outcome, probability) points.
inline JointDistribution from_points(
    std::vector<std::string> names, std::vector<int> cards,
    const std::vector<std::pair<Outcome, double>>& points) {
  JointDistribution d{std::move(names), std::move(cards), {}};
  d.probs.assign(detail::table_size(d.cards), 0.0);
  for (const auto& [o, w] : points) d.probs[d.flat_index(o)] += w;
  validate(d);
  return d;
}

// Sums out every variable not in `keep`; the result's variables follow the
// order given by `keep` (so keep == all variables reorders in place).
inline JointDistribution marginalize(const JointDistribution& d,
                                     const std::vector<std::string>& keep) {
  if (keep.empty()) throw std::invalid_argument("marginalize: empty keep set");
  std::vector<int> pos(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    pos[i] = d.index_of(keep[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (keep[j] == keep[i])
        throw std::invalid_argument("marginalize: duplicate variable " + keep[i]);
  }
  JointDistribution out;
  out.names = keep;
  out.cards.resize(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) out.cards[i] = d.cards[pos[i]];
  out.probs.assign(detail::table_size(out.cards), 0.0);
  const std::size_t n = d.size();
  for (std::size_t flat = 0; flat < n; ++flat) {
    if (d.probs[flat] == 0.0) continue;
    Outcome o = d.outcome_at(flat);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < keep.size(); ++i)
      idx = idx * static_cast<std::size_t>(out.cards[i]) +
            static_cast<std::size_t>(o[pos[i]]);
    out.probs[idx] += d.probs[flat];
  }
  return out;
}

// p(rest | var = value); errors when the conditioning event has zero mass.
inline JointDistribution condition(const JointDistribution& d,
                                   const std::string& var, int value) {
  const int pos = d.index_of(var);
  if (d.arity() < 2)
    throw std::invalid_argument("condition: nothing would remain");
  if (value < 0 || value >= d.cards[pos])
    throw std::out_of_range("condition: value out of range for " + var);
  JointDistribution out;
  for (int i = 0; i < d.arity(); ++i) {
    if (i == pos) continue;
    out.names.push_back(d.names[i]);
    out.cards.push_back(d.cards[i]);
  }
  out.probs.assign(detail::table_size(out.cards), 0.0);
  double mass = 0.0;
  for (std::size_t flat = 0; flat < d.size(); ++flat) {
    Outcome o = d.outcome_at(flat);
    if (o[pos] != value) continue;
    mass += d.probs[flat];
    std::size_t idx = 0;
    int k = 0;
    for (int i = 0; i < d.arity(); ++i) {
      if (i == pos) continue;
      idx = idx * static_cast<std::size_t>(out.cards[k]) + static_cast<std::size_t>(o[i]);
      ++k;
    }
    out.probs[idx] += d.probs[flat];
  }
  if (mass <= 0.0)
    throw std::invalid_argument("condition: zero-probability value for " + var);
  for (double& p : out.probs) p /= mass;
  return out;
}

// Independent product; variables are concatenated (lhs first).
inline JointDistribution product(const JointDistribution& a, const JointDistribution& b) {
  for (const auto& n : b.names)
    if (a.has_variable(n))
      throw std::invalid_argument("product: variable label collision: " + n);
  JointDistribution out;
  out.names = a.names;
  out.names.insert(out.names.end(), b.names.begin(), b.names.end());
  out.cards = a.cards;
  out.cards.insert(out.cards.end(), b.cards.begin(), b.cards.end());
  out.probs.resize(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out.probs[i * b.size() + j] = a.probs[i] * b.probs[j];
  return out;
}

// Pushes one variable through a stochastic map; its cardinality becomes
// ch.out_card. Total probability is conserved exactly up to rounding.
inline JointDistribution apply_channel(const JointDistribution& d,
                                       const std::string& var, const Channel& ch) {
  const int pos = d.index_of(var);
  if (ch.in_card != d.cards[pos])
    throw std::invalid_argument("apply_channel: channel input cardinality " +
                                std::to_string(ch.in_card) + " != |" + var + "| = " +
                                std::to_string(d.cards[pos]));
  validate(ch);
  JointDistribution out;
  out.names = d.names;
  out.cards = d.cards;
  out.cards[pos] = ch.out_card;
  out.probs.assign(detail::table_size(out.cards), 0.0);
  for (std::size_t flat = 0; flat < d.size(); ++flat) {
    const double w = d.probs[flat];
    if (w == 0.0) continue;
    Outcome o = d.outcome_at(flat);
    const int old_value = o[pos];
    for (int nv = 0; nv < ch.out_card; ++nv) {
      const double m = ch.at(nv, old_value);
      if (m == 0.0) continue;
      o[pos] = nv;
      out.probs[out.flat_index(o)] += m * w;
    }
  }
  return out;
}

// Replaces the listed variables by a single variable `new_name` of
// cardinality `new_card`, located at the first listed variable's position.
// `table` is a total lookup over the listed variables' joint range
// (row-major in the order given); probabilities are summed over fibers.
inline JointDistribution relabel(const JointDistribution& d,
                                 const std::vector<std::string>& vars,
                                 const std::string& new_name, int new_card,
                                 const std::vector<int>& table) {
  if (vars.empty()) throw std::invalid_argument("relabel: empty variable list");
  if (new_card <= 0) throw std::invalid_argument("relabel: non-positive target cardinality");
  std::vector<int> pos(vars.size());
  std::size_t domain = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    pos[i] = d.index_of(vars[i]);
    domain *= static_cast<std::size_t>(d.cards[pos[i]]);
  }
  if (table.size() != domain)
    throw std::invalid_argument("relabel: map is not total (expected " +
                                std::to_string(domain) + " entries, got " +
                                std::to_string(table.size()) + ")");
  for (int v : table)
    if (v < 0 || v >= new_card)
      throw std::invalid_argument("relabel: map value out of range");
  for (const auto& n : d.names)
    if (n == new_name && std::find(vars.begin(), vars.end(), n) == vars.end())
      throw std::invalid_argument("relabel: target name collides with surviving variable");

  std::vector<bool> merged(d.names.size(), false);
  for (int p : pos) merged[static_cast<std::size_t>(p)] = true;
  const int anchor = pos[0];

  JointDistribution out;
  for (int i = 0; i < d.arity(); ++i) {
    if (i == anchor) {
      out.names.push_back(new_name);
      out.cards.push_back(new_card);
    } else if (!merged[static_cast<std::size_t>(i)]) {
      out.names.push_back(d.names[i]);
      out.cards.push_back(d.cards[i]);
    }
  }
  out.probs.assign(detail::table_size(out.cards), 0.0);
  for (std::size_t flat = 0; flat < d.size(); ++flat) {
    if (d.probs[flat] == 0.0) continue;
    Outcome o = d.outcome_at(flat);
    std::size_t key = 0;
    for (std::size_t i = 0; i < vars.size(); ++i)
      key = key * static_cast<std::size_t>(d.cards[pos[i]]) +
            static_cast<std::size_t>(o[pos[i]]);
    const int merged_value = table[key];
    std::size_t idx = 0;
    int k = 0;
    for (int i = 0; i < d.arity(); ++i) {
      int v;
      if (i == anchor) v = merged_value;
      else if (merged[static_cast<std::size_t>(i)]) continue;
      else v = o[i];
      idx = idx * static_cast<std::size_t>(out.cards[k]) + static_cast<std::size_t>(v);
      ++k;
    }
    out.probs[idx] += d.probs[flat];
  }
  return out;
}

// Largest absolute entry-wise difference; variables may be ordered
// differently but must form the same set with equal cardinalities.
inline double linf_distance(const JointDistribution& a, const JointDistribution& b) {
  if (a.arity() != b.arity())
    throw std::invalid_argument("linf_distance: arity mismatch");
  JointDistribution br = marginalize(b, a.names);  // pure reorder
  if (br.cards != a.cards)
    throw std::invalid_argument("linf_distance: cardinality mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.probs[i] - br.probs[i]));
  return m;
}

// True iff d factorizes across the given variable blocks within tol (l-inf).
inline bool is_product(const JointDistribution& d,
                       const std::vector<std::vector<std::string>>& partition,
                       double tol = kDistributionTol) {
  if (partition.empty()) throw std::invalid_argument("is_product: empty partition");
  std::vector<std::string> seen;
  for (const auto& block : partition) {
    if (block.empty()) throw std::invalid_argument("is_product: empty block");
    for (const auto& n : block) {
      d.index_of(n);
      if (std::find(seen.begin(), seen.end(), n) != seen.end())
        throw std::invalid_argument("is_product: variable repeated across blocks: " + n);
      seen.push_back(n);
    }
  }
  if (seen.size() != d.names.size())
    throw std::invalid_argument("is_product: partition does not cover all variables");
  JointDistribution prod = marginalize(d, partition[0]);
  for (std::size_t i = 1; i < partition.size(); ++i)
    prod = product(prod, marginalize(d, partition[i]));
  return linf_distance(marginalize(d, prod.names), prod) <= tol;
}

}  // namespace netinfo

#endif  // NETINFO_JOINT_DISTRIBUTION_HPP
