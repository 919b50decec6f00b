// Distribution JSON:
//   {"variables": [..], "cardinalities": [..],
//    "entries": [{"outcome": [..], "p": <number>}, ..]}
// Unlisted outcomes are zero; duplicate outcomes are an error. The writer
// emits probabilities with 17 significant digits so a read round-trips
// bit-exactly; reading goes through nlohmann::json.
#ifndef NETINFO_DISTRIBUTION_IO_HPP
#define NETINFO_DISTRIBUTION_IO_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "netinfo/joint_distribution.hpp"

namespace netinfo {

namespace detail {
inline std::string format_prob(double p) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", p);
  return buf;
}
}  // namespace detail

inline std::string distribution_to_json(const JointDistribution& d) {
  validate(d);
  std::ostringstream os;
  os << "{\n  \"variables\": [";
  for (std::size_t i = 0; i < d.names.size(); ++i)
    os << (i ? ", " : "") << nlohmann::json(d.names[i]).dump();
  os << "],\n  \"cardinalities\": [";
  for (std::size_t i = 0; i < d.cards.size(); ++i) os << (i ? ", " : "") << d.cards[i];
  os << "],\n  \"entries\": [";
  bool first = true;
  for (std::size_t flat = 0; flat < d.size(); ++flat) {
    if (d.probs[flat] == 0.0) continue;
    const Outcome o = d.outcome_at(flat);
    os << (first ? "" : ",") << "\n    {\"outcome\": [";
    for (std::size_t i = 0; i < o.size(); ++i) os << (i ? ", " : "") << o[i];
    os << "], \"p\": " << detail::format_prob(d.probs[flat]) << "}";
    first = false;
  }
  os << "\n  ]\n}\n";
  return os.str();
}

inline JointDistribution distribution_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("cardinalities") ||
      !j.contains("entries"))
    throw std::invalid_argument(
        "distribution JSON must have variables, cardinalities and entries");
  JointDistribution d;
  d.names = j.at("variables").get<std::vector<std::string>>();
  d.cards = j.at("cardinalities").get<std::vector<int>>();
  if (d.names.empty() || d.names.size() != d.cards.size())
    throw std::invalid_argument("variables and cardinalities must be non-empty, equal length");
  d.probs.assign(detail::table_size(d.cards), 0.0);
  std::unordered_set<std::size_t> seen;
  for (const auto& e : j.at("entries")) {
    const Outcome o = e.at("outcome").get<Outcome>();
    const double p = e.at("p").get<double>();
    const std::size_t flat = d.flat_index(o);  // range-checks each index
    if (!seen.insert(flat).second) {
      std::string s;
      for (int v : o) s += std::to_string(v) + " ";
      throw std::invalid_argument("duplicate outcome in entries: " + s);
    }
    d.probs[flat] = p;
  }
  validate(d);
  return d;
}

inline JointDistribution parse_distribution(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("distribution JSON parse error: ") + e.what());
  }
  return distribution_from_json(j);
}

inline void write_distribution(const JointDistribution& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << distribution_to_json(d);
}

inline JointDistribution read_distribution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_distribution(ss.str());
}

}  // namespace netinfo

#endif  // NETINFO_DISTRIBUTION_IO_HPP
