#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace edgespace {

enum class CheckStatus { holds, fails, inconclusive };

std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::holds;
  std::string detail;
  std::optional<nlohmann::json> witness;  // concrete edge set / cut / vertex
};

struct Series {
  std::string name;
  std::vector<int> radii;
  std::vector<long long> values;
};

// Result of one experiment: per-check verdicts plus numeric series indexed by
// radius. Serialization is deterministic (sorted keys, series in radius
// order), so identical runs emit identical bytes.
struct Report {
  std::string experiment;
  std::map<std::string, std::string> parameters;
  std::vector<Check> checks;
  std::vector<Series> series;

  bool has_failure() const;
  const Check* find(const std::string& name) const;
  const Series* find_series(const std::string& name) const;

  nlohmann::json to_json() const;
  std::string human_summary() const;  // one line per check, then series
};

}  // namespace edgespace
