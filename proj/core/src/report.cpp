#include "edgespace/report.hpp"

#include <sstream>

namespace edgespace {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::fails: return "fails";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

bool Report::has_failure() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fails) return true;
  }
  return false;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const Series* Report::find_series(const std::string& name) const {
  for (const auto& s : series) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["parameters"] = parameters;
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    if (!c.detail.empty()) cj["detail"] = c.detail;
    if (c.witness) cj["witness"] = *c.witness;
    checks_json.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks_json);
  nlohmann::json series_json = nlohmann::json::array();
  for (const auto& s : series) {
    nlohmann::json sj;
    sj["name"] = s.name;
    sj["radii"] = s.radii;
    sj["values"] = s.values;
    series_json.push_back(std::move(sj));
  }
  j["series"] = std::move(series_json);
  return j;
}

std::string Report::human_summary() const {
  std::ostringstream os;
  os << "experiment " << experiment << "\n";
  for (const auto& c : checks) {
    os << "  check " << c.name << ": " << to_string(c.status);
    if (!c.detail.empty()) os << " - " << c.detail;
    os << "\n";
    if (c.witness) os << "    witness: " << c.witness->dump() << "\n";
  }
  for (const auto& s : series) {
    os << "  series " << s.name << ":";
    for (std::size_t i = 0; i < s.radii.size(); ++i) {
      os << " r" << s.radii[i] << "=" << s.values[i];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace edgespace
